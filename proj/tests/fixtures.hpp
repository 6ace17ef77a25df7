// Copyright 2026 The peckseq Authors
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

// Reference values for the eleven worked examples and the
// cube-root-of-two table.  Decimal strings are kept exactly as printed so the
// comparison precision follows the printed digits.

#ifndef PECKSEQ_TESTS_FIXTURES_HPP_
#define PECKSEQ_TESTS_FIXTURES_HPP_

#include <string>
#include <vector>

namespace fixtures {

struct CubeRootRow {
  int n;
  const char* a;  // empty above n = 13
  const char* b;
  const char* c;
  const char* u;  // sqrt(c) <c theta>
  const char* v;  // sqrt(c) <c theta^2>
  const char* product;
};

// theta^3 = 2, lambda = 1 + theta + theta^2.
inline const std::vector<CubeRootRow>& cube_root_two_table() {
  static const std::vector<CubeRootRow> rows = {
      {1, "1", "1", "1", "0.2599210", "-0.4125989", "0.1072432"},
      {2, "5", "4", "3", "-0.3814614", "-0.4118762", "0.1571149"},
      {3, "19", "15", "12", "0.4124103", "0.1690919", "0.0697352"},
      {4, "73", "58", "46", "-0.2959246", "0.1386877", "0.04104111"},
      {5, "281", "223", "177", "0.08016847", "-0.3993077", "0.03201189"},
      {6, "1081", "858", "681", "0.1627079", "0.5249569", "0.0854146"},
      {7, "4159", "3301", "2620", "-0.3505866", "-0.4731548", "0.1658817"},
      {8, "16001", "12700", "10080", "0.4199639", "0.2614234", "0.1097884"},
      {9, "61561", "48861", "38781", "-0.3473879", "0.03867265", "0.01343441"},
      {10, "236845", "187984", "149203", "0.1573906", "-0.3256969", "0.0512616"},
      {11, "911219", "723235", "574032", "0.08580665", "0.5026315", "0.04312913"},
      {12, "3505753", "2782518", "2208486", "-0.3000002", "-0.5096706", "0.1529013"},
      {13, "13487761", "10705243", "8496757", "0.4127900", "0.3444347", "0.1421792"},
      {14, "", "", "32689761", "-0.386052", "-0.0627756", "0.0242346"},
      {15, "", "", "125768040", "0.228823", "-0.240102", "0.054941"},
      {16, "", "", "483870160", "0.00575037", "0.461823", "0.00265565"},
      {17, "", "", "1861604361", "-0.238380", "-0.527441", "0.125732"},
      {18, "", "", "7162191603", "0.390435", "0.414778", "0.161944"},
      {19, "", "", "27555258052", "-0.410517", "-0.161915", "0.066469"},
      {20, "", "", "106013953326", "0.291840", "-0.145677", "0.0425145"},
      {21, "", "", "407869825737", "-0.0745174", "0.404029", "0.0301072"},
      {22, "", "", "1569206595241", "-0.167993", "-0.525814", "0.088333"},
      {23, "", "", "6037243216260", "0.353720", "0.469867", "0.166202"},
      {24, "", "", "23227219260240", "-0.419885", "-0.255100", "0.107113"},
      {25, "", "", "89362594024741", "0.344124", "-0.0458947", "0.0157935"},
      {26, "", "", "343806683071203", "-0.152045", "0.331376", "0.050384"},
      {27, "", "", "1322735050548072", "-0.0914277", "-0.504849", "0.0461571"},
      {28, "", "", "5088987794882566", "0.303996", "0.507676", "0.154332"},
  };
  return rows;
}

struct PsiRowFixture {
  long Q;
  const char* psi;    // exact, or empty when abbreviated
  const char* first3;
  const char* last3;
  long digits;
  const char* product;
  const char* bound;
};

struct ExampleFixture {
  int id;
  long A, B, C, D;
  long d;
  long r0, r1, r2, s;
  long la, lb, lc, lden;  // lambda = (la + lb theta + lc theta^2) / lden
  // C1, C2, M_theta, M_alpha, M_beta1, M_beta2, N, C0, n0
  std::vector<const char*> constants;
  std::vector<const char*> convergents;
  std::vector<PsiRowFixture> psi_rows;  // rows with Q <= 10^4
};

inline const std::vector<ExampleFixture>& examples() {
  static const std::vector<ExampleFixture> ex = {
      {1, 1, 0, 0, -2, 1, 0, 0, 1, 1, 1, 1, 1, 1,
       {"1.41421", "0.458243", "1.09112", "1.09112", "1.09112", "0.989540", "8.729", "1.07971",
        "3.216"},
       {"1/5", "3/16", "43/229", "1551/8260", "1594/8489", "3145/16749", "4739/25238",
        "64752/344843", "198995/1059767", "263747/1404610"},
       {{5, "177", "", "", 3, "0.0320119", "0.0674819"},
        {16, "483870160", "", "", 9, "0.00265565", "0.00471489"},
        {229, "", "210", "617", 134, "0.000071868", "0.000130716"},
        {8260, "", "539", "526", 4833, "0.0000473553", "0.000127189"},
        {8489, "", "540", "581", 4967, "0.0000245330", "0.0000644642"}}},
      {2, 1, 0, -1, -1, 1, 0, 0, 1, 1, 0, 1, 0, 1,
       {"1.66593", "0.484238", "1.29181", "1.29181", "1.29181", "2.02917", "10.334", "2.6213",
        "16.6109"},
       {"-1/4", "-2/9", "-13/58", "-41/183", "-1038/4633", "-1079/4816", "-2117/9449",
        "-15898/70959", "-18015/80408", "-63969148/285519359"},
       {{4, "1", "", "", 1, "0.079596", "0.291255"},
        {9, "3", "", "", 1, "0.0205192", "0.0451948"},
        {58, "2839729", "", "", 7, "0.0072113", "0.014324"},
        {183, "5232446865180756766896", "", "", 22, "0.000276774", "0.000565788"},
        {4633, "", "147", "145", 566, "0.000146703", "0.000544289"},
        {4816, "", "328", "896", 588, "0.000130300", "0.000277415"},
        {9449, "", "206", "593", 1154, "0.0000162949", "0.000036941"}}},
      {3, 1, -7, 0, -2, 9, 0, -7, 1, 2, 96109, 25898, 1834, 9,
       {"6.24920", "0.141231", "11.9149", "536.169", "12132.1", "47.7138", "10008.5", "578869",
        "1.6119"},
       {"-1/12", "-2/25", "-3/37", "-8/99", "-19/235", "-46/569", "-111/1373", "-1378/17045",
        "-1489/18418", "-7334/90717"},
       {{12, "", "131", "120", 60, "10.2213", "23154.8"},
        {25, "", "440", "692", 124, "7.2066", "15645.1"},
        {37, "", "160", "332", 184, "3.00062", "5847.17"},
        {99, "", "881", "988", 491, "1.24736", "2463.27"},
        {235, "", "969", "892", 1166, "0.50306", "1017.35"},
        {569, "", "642", "132", 2824, "0.242022", "421.609"},
        {1373, "", "310", "052", 6815, "0.0188969", "33.9612"}}},
      {4, 1, 0, -147, -740, 9, 0, 0, 1, 1, 96109, 25898, 1834, 9,
       {"6.24920", "0.141231", "11.9149", "11.9149", "11.9149", "1.87438", "303.228", "22.3329",
        "1"},
       {"-1/12", "-2/25", "-3/37", "-8/99", "-19/235", "-46/569", "-111/1373", "-1378/17045",
        "-1489/18418", "-7334/90717"},
       {{12, "", "728", "840", 58, "0.133515", "0.893317"},
        {25, "", "244", "594", 123, "0.0472532", "0.603593"},
        {37, "", "892", "074", 182, "0.0311235", "0.225585"},
        {99, "", "489", "166", 490, "0.0109711", "0.0950337"},
        {235, "", "538", "494", 1165, "0.00475198", "0.0392494"},
        {569, "", "357", "674", 2823, "0.00221919", "0.0162658"},
        {1373, "", "172", "114", 6814, "0.000175104", "0.00131023"}}},
      {5, 1, 0, -8, -10, 1, 0, 0, 1, 1, 9, 10, 3, 1,
       {"4.60238", "0.199841", "1.37961", "1.37961", "1.37961", "0.923493", "11.04", "1.27406",
        "1.11156"},
       {"-1/16", "-2095966/33535457", "-62878981/1006063726", "-64974947/1039599183",
        "-192828875/3085262092", "-257803822/4124861275"},
       {{16, "", "420", "880", 29, "7.3376e-9", "3.79915e-8"}}},
      {6, 1, 0, 1, -1, 1, 0, 0, 1, 1, 1, 0, 1, 1,
       {"1.41421", "0.645940", "2.84001", "2.84001", "2.84001", "1.31029", "22.72", "3.72125",
        "16.3416"},
       {"1/2", "2/5", "9/22", "704/1721", "7753/18953", "16210/39627", "202273/494477",
        "825302/2017535", "81907171/200230442", "246546815/602708861"},
       {{2, "1", "", "", 1, "0.147899", "0.744249"},
        {5, "3", "", "", 1, "0.055917", "0.169148"},
        {22, "1873", "", "", 4, "0.00065464", "0.00216226"},
        {1721, "", "208", "364", 286, "0.000057056", "0.000196341"}}},
      // beta = 1/alpha = -1 - alpha + alpha^2.  Only this beta reproduces the
      // printed psi rows for this cubic.
      {7, 1, -1, -1, -1, 9, -1, -1, 1, 1, 3, 3, 0, 9,
       {"1.75637", "0.427555", "10.1378", "91.2398", "182.480", "44.8628", "243.3", "8186.54",
        "18.0326"},
       {"-1/3", "-3/10", "-4/13", "-55/179", "-59/192", "-173/563", "-578/1881", "-13467/43826",
        "-162182/527793", "-175649/571619"},
       {{3, "9", "", "", 1, "0.429094", "818.654"},
        {10, "729", "", "", 3, "40.7299", "629.734"},
        {13, "4536", "", "", 4, "3.71296", "45.7349"},
        {179, "", "387", "121", 48, "2.54725", "42.6382"},
        {192, "", "106", "568", 52, "1.10673", "14.5409"},
        {563, "", "163", "601", 150, "0.361992", "4.35223"},
        {1881, "", "105", "308", 499, "0.0157040", "0.186796"}}},
      {8, 1, 0, 2, -1, 1, 0, 0, 1, 1, 2, 0, 1, 1,
       {"1.41421", "0.618191", "4.09039", "4.09039", "4.09039", "0.992414", "32.72", "4.05936",
        "8.81958"},
       {"1/2", "4/9", "5/11", "9/20", "14/31", "37/82", "8265/18317", "16567/36716",
        "190502/422193", "20971787/46477946", "21162289/46900139", "2243012132/4970992541"},
       {{2, "2", "", "", 1, "0.076640", "0.451040"},
        {9, "472", "", "", 3, "0.050131", "0.369032"},
        {11, "2296", "", "", 4, "0.0291294", "0.202968"},
        {20, "2835694", "", "", 7, "0.0201199", "0.130947"},
        {31, "17036776865", "", "", 11, "0.0098903", "0.0495043"},
        {82, "", "563", "769", 28, "0.0000445638", "0.000221617"}}},
      {9, 1, 0, -2, -2, 1, 0, 0, 1, 1, 1, 1, 0, 1,
       {"2.12140", "0.367826", "1.17046", "1.17046", "1.17046", "1.46957", "9.364", "1.72008",
        "4.39202"},
       {"1/2", "3/7", "4/9", "7/16", "25/57", "82/187", "189/431", "3484/7945", "3673/8376",
        "25522/58201", "105761/241180", "131283/299381", "893459/2037466"},
       {{2, "1", "", "", 1, "0.0300832", "0.245725"},
        {7, "169", "", "", 3, "0.064779", "0.191120"},
        {9, "1296", "", "", 4, "0.0281634", "0.107505"},
        {16, "1618776", "", "", 7, "0.0125768", "0.0301768"},
        {57, "2219769241218582281661888", "", "", 25, "0.00328181", "0.00919827"},
        {187, "", "714", "835", 82, "0.00165204", "0.00399089"},
        {431, "", "619", "593", 190, "0.000086617", "0.000216498"},
        {7945, "", "564", "776", 3514, "0.000074675", "0.000205358"},
        {8376, "", "258", "036", 3705, "0.0000120265", "0.0000295541"}}},
      {10, 1, -1, 1, -2, 9, 0, 0, 1, 1, 10, 2, 1, 9,
       {"1.41421", "0.513861", "9.81058", "88.2952", "88.2952", "27.1782", "235.5", "2399.70",
        "10.4959"},
       {"1/3", "1/4", "18/71", "235/927", "253/998", "2259/8911", "4771/18820", "7030/27731",
        "25861/102013", "84613/333770", "110474/435783", "195087/769553"},
       {{3, "54", "", "", 2, "0.461096", "599.925"},
        {4, "153", "", "", 3, "1.07036", "33.7986"},
        {71, "", "292", "560", 33, "0.50606", "2.58867"},
        {927, "", "223", "190", 420, "0.454662", "2.40451"},
        {998, "", "274", "634", 452, "0.054208", "0.269296"},
        {8911, "", "715", "385", 4028, "0.0196042", "0.127508"}}},
      {11, 1, 0, -1, -2, 1, 0, 0, 1, 1, 1, 1, 1, 1,
       {"1.41421", "0.410174", "0.870111", "0.870111", "0.870111", "1.12656", "6.961",
        "0.980236", "2.46219"},
       {"-1/2", "-3/7", "-4/9", "-19/43", "-23/52", "-272/615", "-11175/25267", "-11447/25882",
        "-22622/51149", "-34069/77031", "-90760/205211"},
       {{2, "4", "", "", 1, "0.088387", "0.140034"},
        {7, "10407", "", "", 5, "0.0402688", "0.108915"},
        {9, "243385", "", "", 6, "0.0126439", "0.0227962"},
        {43, "", "455", "491", 29, "0.0104498", "0.0188507"},
        {52, "", "659", "364", 35, "0.00100429", "0.00159388"},
        {615, "", "152", "879", 421, "0.0000240102", "0.0000387951"}}},
  };
  return ex;
}

// Printed continued fraction quotients of phi/pi for Example 5.
inline const std::vector<long>& ex5_quotients() {
  static const std::vector<long> q = {-1, 1, 15, 2095966, 30, 1, 2, 1, 1, 3, 1, 3, 1, 1, 1};
  return q;
}

}  // namespace fixtures

#endif  // PECKSEQ_TESTS_FIXTURES_HPP_
