// Copyright 2026 The Ramsey Witness Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ramsey/fixtures.h"

namespace ramsey {

const std::vector<FixtureRecord>& AllFixtures() {
  static const std::vector<FixtureRecord> kFixtures = {
      {"RW5W7-14", "W5,W7", 14, FixtureRecord::Format::kGraph6,
       R"fix(Mav?Hwu]`ySZpyyg?)fix",
       "R(W5,W7) >= 15"},
      {"RW5W9-17", "W9,W5", 17, FixtureRecord::Format::kGraph6,
       R"fix(PIL{eMI^Jqp[gXkp_|zxOaww)fix",
       "R(W5,W9) >= 18"},
      {"RB2B8-20", "B2,B8", 20, FixtureRecord::Format::kGraph6,
       R"fix(SXgcISrdSaJQBJs_jp@CWFOV?q}HWOPbc)fix",
       "R(B2,B8) >= 21"},
      {"RB2B9-21", "B2,B9", 21, FixtureRecord::Format::kGraph6,
       R"fix(TXhJ?ScLQoHAO]EhcLe_G_nAEXuiBSnW?]?w)fix",
       "R(B2,B9) >= 22"},
      {"RB2B10-24", "B2,B10", 24, FixtureRecord::Format::kGraph6,
       R"fix(W?bFFbw^@{BwgDsAl?lg@U_cl@GlDGUacDih?lTKApSgDqh)fix",
       "R(B2,B10) >= 25"},
      {"RB3B6-18", "B3,B6", 18, FixtureRecord::Format::kGraph6,
       R"fix(QG]cql@_GTeAwhrAVeEaiHv?Sn?)fix",
       "R(B3,B6) >= 19"},
      {"RB3B7-19", "B3,B7", 19, FixtureRecord::Format::kGraph6,
       R"fix(REf`OcBMI@ozZSyaMGil?ABm_o|jOO)fix",
       "R(B3,B7) >= 20"},
      {"RB4B5-18", "B4,B5", 18, FixtureRecord::Format::kGraph6,
       R"fix(QYMOYLbMIt\GTS_Mtp]_YAtuuoO)fix",
       "R(B4,B5) >= 19"},
      {"RB4B7-21", "B4,B7", 21, FixtureRecord::Format::kGraph6,
       R"fix(TqmoKUaoq\bAK|]oMgORPWJYMCxGye`EmTcY)fix",
       "R(B4,B7) >= 22"},
      {"RB5B6-22", "B5,B6", 22, FixtureRecord::Format::kGraph6,
       R"fix(U_Ya{gHmOv}QfaSGkhXLXoN]krJqbE^?dvdCkHso)fix",
       "R(B5,B6) >= 23"},
      {"RB5B7-24", "B5,B7", 24, FixtureRecord::Format::kGraph6,
       R"fix(W|teicY@kY[EQsKWEJqIIde]`^BZr?zwhGnwaCv`LUHF_UJ)fix",
       "R(B5,B7) >= 25"},
      {"RB6B7-26", "B6,B7", 26, FixtureRecord::Format::kGraph6,
       R"fix(YMQcwl`gEBbKaZK{SbPhN~BNnaA\Q_YyVQ{A]uwEoemTUhkBdkk\T@Y_)fix",
       "R(B6,B7) >= 27"},
      {"RB6B8-27", "B6,B8", 27, FixtureRecord::Format::kGraph6,
       R"fix(ZOp~T_WyXbZ`IjWLOfpZcFgDurCaMkcd]v`gpyHaEFdjjWLiIQtHB]QiZbIG)fix",
       "R(B6,B8) >= 28"},
      {"RB7B8-30", "B7,B8", 30, FixtureRecord::Format::kGraph6,
       R"fix(]UWsqWecqRCeceqRKcsDjoUn_lJ_lLoUd[Dxj_jMmAkl[FXl[BXUmDkdjbZGl[ZXAtplcDjrZG)fix",
       "R(B7,B8) >= 31"},
      {"RB8B8-32", "B8,B8", 32, FixtureRecord::Format::kGraph6,
       R"fix(_Uzrpy]RpNQ]q]xN]Rrq]`DnAJ^AJJ`DewPXvAHJ[GsuwPhUwRhJ[JsavB|KUwNhPZa}cavD|GavD|GPZq}c)fix",
       "R(B8,B8) >= 33"},
      {"GR3K42-9", "GR:3,K4,2", 9, FixtureRecord::Format::kMatrix,
       R"fix([[0,2,3,3,3,1,1,1,2]
 [2,0,1,1,2,1,3,3,2]
 [3,1,0,2,3,1,3,2,1]
 [3,1,2,0,1,3,1,2,3]
 [3,2,3,1,0,2,2,3,1]
 [1,1,1,3,2,0,2,3,3]
 [1,3,3,1,2,2,0,1,3]
 [1,3,2,2,3,3,1,0,1]
 [2,2,1,3,1,3,3,1,0]])fix",
       "GR(3,K4,2) >= 10"},
      {"GR4K42-14", "GR:4,K4,2", 14, FixtureRecord::Format::kMatrix,
       R"fix([[0,4,3,1,2,3,4,3,2,2,4,1,4,1]
 [4,0,2,4,1,1,1,3,4,3,2,2,3,1]
 [3,2,0,2,2,3,1,1,4,1,3,3,4,4]
 [1,4,2,0,4,2,2,3,1,3,4,3,1,2]
 [2,1,2,4,0,4,3,4,2,1,1,3,2,1]
 [3,1,3,2,4,0,1,4,1,2,2,4,1,3]
 [4,1,1,2,3,1,0,4,3,2,3,3,4,2]
 [3,3,1,3,4,4,4,0,2,2,1,2,2,1]
 [2,4,4,1,2,1,3,2,0,4,1,1,3,3]
 [2,3,1,3,1,2,2,2,4,0,3,1,1,4]
 [4,2,3,4,1,2,3,1,1,3,0,4,2,3]
 [1,2,3,3,3,4,3,2,1,1,4,0,4,1]
 [4,3,4,1,2,1,4,2,3,1,2,4,0,2]
 [1,1,4,2,1,3,2,1,3,4,3,1,2,0]])fix",
       "GR(4,K4,2) >= 15"},
      {"GR4K43-9", "GR:4,K4,3", 9, FixtureRecord::Format::kMatrix,
       R"fix([[0,2,3,3,1,4,2,1,4]
 [2,0,1,4,3,3,2,4,1]
 [3,1,0,3,4,2,4,2,1]
 [3,4,3,0,2,1,1,4,2]
 [1,3,4,2,0,3,4,1,2]
 [4,3,2,1,3,0,1,2,4]
 [2,2,4,1,4,1,0,3,3]
 [1,4,2,4,1,2,3,0,3]
 [4,1,1,2,2,4,3,3,0]])fix",
       "GR(4,K4,3) >= 10"},
      {"GR3K52-19", "GR:3,K5,2", 19, FixtureRecord::Format::kMatrix,
       R"fix([[0,1,2,2,3,2,3,1,1,3,3,1,1,3,2,3,2,2,1],
 [1,0,1,2,2,3,2,3,1,1,3,3,1,1,3,2,3,2,2],
 [2,1,0,1,2,2,3,2,3,1,1,3,3,1,1,3,2,3,2],
 [2,2,1,0,1,2,2,3,2,3,1,1,3,3,1,1,3,2,3],
 [3,2,2,1,0,1,2,2,3,2,3,1,1,3,3,1,1,3,2],
 [2,3,2,2,1,0,1,2,2,3,2,3,1,1,3,3,1,1,3],
 [3,2,3,2,2,1,0,1,2,2,3,2,3,1,1,3,3,1,1],
 [1,3,2,3,2,2,1,0,1,2,2,3,2,3,1,1,3,3,1],
 [1,1,3,2,3,2,2,1,0,1,2,2,3,2,3,1,1,3,3],
 [3,1,1,3,2,3,2,2,1,0,1,2,2,3,2,3,1,1,3],
 [3,3,1,1,3,2,3,2,2,1,0,1,2,2,3,2,3,1,1],
 [1,3,3,1,1,3,2,3,2,2,1,0,1,2,2,3,2,3,1],
 [1,1,3,3,1,1,3,2,3,2,2,1,0,1,2,2,3,2,3],
 [3,1,1,3,3,1,1,3,2,3,2,2,1,0,1,2,2,3,2],
 [2,3,1,1,3,3,1,1,3,2,3,2,2,1,0,1,2,2,3],
 [3,2,3,1,1,3,3,1,1,3,2,3,2,2,1,0,1,2,2],
 [2,3,2,3,1,1,3,3,1,1,3,2,3,2,2,1,0,1,2],
 [2,2,3,2,3,1,1,3,3,1,1,3,2,3,2,2,1,0,1],
 [1,2,2,3,2,3,1,1,3,3,1,1,3,2,3,2,2,1,0]])fix",
       "GR(3,K5,2) >= 20"},
      {"GR3K62-31", "GR:3,K6,2", 31, FixtureRecord::Format::kMatrix,
       R"fix([[0,3,3,3,3,2,1,2,1,1,1,1,3,1,3,2,2,2,3,3,1,3,2,1,2,2,3,3,2,1,1]
 [3,0,2,1,3,2,3,2,2,1,2,2,2,1,1,1,2,2,2,2,1,3,3,3,1,1,1,1,3,3,2]
 [3,2,0,2,1,1,3,3,1,3,2,2,3,3,2,2,1,1,3,1,3,2,1,3,3,1,1,1,1,2,2]
 [3,1,2,0,1,3,1,3,3,1,1,2,3,1,2,3,1,1,1,3,1,2,2,3,2,2,3,3,3,2,1]
 [3,3,1,1,0,1,1,2,1,1,2,1,1,2,3,2,1,2,3,2,2,3,2,2,1,2,1,3,3,3,2]
 [2,2,1,3,1,0,1,2,2,3,1,3,2,2,3,3,1,3,2,2,1,3,2,3,1,1,1,3,1,1,3]
 [1,3,3,1,1,1,0,1,1,2,3,1,3,3,2,2,3,1,1,3,2,2,3,1,1,3,2,2,1,3,1]
 [2,2,3,3,2,2,1,0,2,3,2,3,3,3,1,1,2,2,1,2,3,1,1,3,1,1,3,2,3,2,1]
 [1,2,1,3,1,2,1,2,0,2,2,1,2,2,1,3,1,2,2,3,2,1,2,1,3,2,3,1,1,3,3]
 [1,1,3,1,1,3,2,3,2,0,2,2,3,1,3,1,1,1,1,1,2,1,3,3,3,2,2,2,3,2,1]
 [1,2,2,1,2,1,3,2,2,2,0,2,2,2,2,2,3,2,3,3,1,2,3,1,1,3,1,3,2,1,2]
 [1,2,2,2,1,3,1,3,1,2,2,0,1,3,3,3,1,3,1,2,3,1,1,1,1,2,1,2,3,2,3]
 [3,2,3,3,1,2,3,3,2,3,2,1,0,3,1,2,1,1,2,1,3,1,1,3,1,2,1,1,2,2,2]
 [1,1,3,1,2,2,3,3,2,1,2,3,3,0,1,1,1,3,2,2,3,2,2,2,2,1,1,1,3,1,3]
 [3,1,2,2,3,3,2,1,1,3,2,3,1,1,0,1,2,3,3,1,2,2,1,2,3,3,2,1,1,3,3]
 [2,1,2,3,2,3,2,1,3,1,2,3,2,1,1,0,3,3,3,3,1,1,3,3,1,1,3,2,2,3,2]
 [2,2,1,1,1,1,3,2,1,1,3,1,1,1,2,3,0,2,3,2,2,3,3,2,2,3,1,3,2,3,1]
 [2,2,1,1,2,3,1,2,2,1,2,3,1,3,3,3,2,0,1,1,3,3,2,2,2,1,1,3,1,1,3]
 [3,2,3,1,3,2,1,1,2,1,3,1,2,2,3,3,3,1,0,2,3,3,2,2,2,3,1,3,1,2,1]
 [3,2,1,3,2,2,3,2,3,1,3,2,1,2,1,3,2,1,2,0,2,1,1,2,3,1,3,1,1,2,2]
 [1,1,3,1,2,1,2,3,2,2,1,3,3,3,2,1,2,3,3,2,0,2,1,1,1,1,2,2,3,1,3]
 [3,3,2,2,3,3,2,1,1,1,2,1,1,2,2,1,3,3,3,1,2,0,1,3,1,1,2,3,3,3,1]
 [2,3,1,2,2,2,3,1,2,3,3,1,1,2,1,3,3,2,2,1,1,1,0,2,2,3,1,1,3,3,1]
 [1,3,3,3,2,3,1,3,1,3,1,1,3,2,2,3,2,2,2,2,1,3,2,0,2,2,2,3,3,1,2]
 [2,1,3,2,1,1,1,1,3,3,1,1,1,2,3,1,2,2,2,3,1,1,2,2,0,1,3,3,2,3,3]
 [2,1,1,2,2,1,3,1,2,2,3,2,2,1,3,1,3,1,3,1,1,1,3,2,1,0,1,3,2,2,2]
 [3,1,1,3,1,1,2,3,3,2,1,1,1,1,2,3,1,1,1,3,2,2,1,2,3,1,0,2,3,1,1]
 [3,1,1,3,3,3,2,2,1,2,3,2,1,1,1,2,3,3,3,1,2,3,1,3,3,3,2,0,1,2,1]
 [2,3,1,3,3,1,1,3,1,3,2,3,2,3,1,2,2,1,1,1,3,3,3,3,2,2,3,1,0,3,2]
 [1,3,2,2,3,1,3,2,3,2,1,2,2,1,3,3,3,1,2,2,1,3,3,1,3,2,1,2,3,0,3]
 [1,2,2,1,2,3,1,1,3,1,2,3,2,3,3,2,1,3,1,2,3,1,1,2,3,2,1,1,2,3,0]])fix",
       "GR(3,K6,2) >= 32"},
  };
  return kFixtures;
}

}  // namespace ramsey
