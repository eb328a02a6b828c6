// Generated by freeze_header.py from frozen_values.txt. Do not edit.
#pragma once

#include <array>

#include "conecurve/lorentz.hpp"

namespace frozen {

using conecurve::LorentzVector;

struct BasePoint {
  double s;
  LorentzVector p, d1, d2, d3, y;
  double kappa, dkappa;
};

struct PartnerPoint {
  const char* kind;
  double b, c, cstar, s;
  LorentzVector gamma;
  double sigma;
  LorentzVector alpha_g;
  double kappa_g;
  LorentzVector y_g;
};

inline constexpr std::array<BasePoint, 3> kExample1 = {{
  {0, {-0.50000000000000000, 0, 0.50000000000000000}, {0, 1.0000000000000000, 0}, {1.5000000000000000, 0, 0.50000000000000000}, {0, -2.0000000000000000, 0}, {-1.0000000000000000, 0, -1.0000000000000000}, -1.0000000000000000, 0},
  {1, {0.12348604374373649, 0.76159415595576489, 0.77154031740762189}, {1.0811549443864738, 0.41997434161402607, 0.58760059682190073}, {0.66781837756802878, -0.63970000844922450, 0.77154031740762189}, {-0.16252602862855681, 0.62162668077129626, 0.58760059682190073}, {-0.68386681057585537, 0.54072208009018857, -0.87181086395172499}, -0.12996151242103910, 0.95955001267383675},
  {0.7, {-0.16912095717740352, 0.60436777711716350, 0.62758450281547151}, {0.86079495879276786, 0.63473958998245859, 0.37929185091976675}, {0.84228003684792360, -0.76723231009191655, 0.62758450281547151}, {-0.97297955280676166, 0.12159227738323650, 0.37929185091976675}, {-0.76581886491228629, 0.49399196608156089, -0.91132134640239202}, -0.45210938497368788, 1.1508484651378748}
}};

inline constexpr std::array<PartnerPoint, 9> kPartners = {{
  {"xa", 1, 1, 1, 0, {-0.50000000000000000, 1.0000000000000000, 0.50000000000000000}, 1.7320508075688773, {0.86602540378443865, 0.57735026918962576, 0.28867513459481288}, -0.33333333333333333, {-0.33333333333333333, 0.33333333333333333, -0.33333333333333333}},
  {"xy", 1, 1, 1, 0, {-1.0606601717798213, 0, -0.35355339059327376}, 1.4142135623730950, {0, 1.0000000000000000, 0}, -0.50000000000000000, {-0.53033008588991064, 0, -0.17677669529663688}},
  {"xy", 1, 2, 1, 0, {-1.0000000000000000, 0, 0}, 1.5000000000000000, {0, 1.0000000000000000, 0}, -0.44444444444444444, {-0.55555555555555556, 0, -0.33333333333333333}},
  {"xay", 1, 1, 1, 0, {-0.86602540378443865, 0.57735026918962576, -0.28867513459481288}, 1.4142135623730950, {0.61237243569579452, 0.81649658092772603, 0.20412414523193151}, -0.50000000000000000, {-0.43301270189221932, 0.28867513459481288, -0.14433756729740644}},
  {"ay", 1, 1, 1, 0, {-1.0000000000000000, 1.0000000000000000, -1.0000000000000000}, 1.7320508075688773, {0.86602540378443865, 0.57735026918962576, 0.28867513459481288}, -0.33333333333333333, {-0.16666666666666667, 0.33333333333333333, 0.16666666666666667}},
  {"xa", 2, 3, 1, 0.7, {0.60711352302666259, 1.5412912556582038, 1.3206686051429740}, 1.7760120410479699, {1.2012714022919457, 0.10409674631072945, 0.67371293186114369}, 0.051278036708228772, {-0.30773501617379051, 0.38395995003733391, -0.48938394575578856}},
  {"xy", 2, 3, 1, 0.7, {-0.58860877303557378, 0.80860424280689679, 0.017352497795951662}, 1.1270508789021535, {0.86079495879276786, 0.63473958998245859, 0.37929185091976675}, -0.35592334825095994, {-0.53783137381121886, 0.39294214876997917, -0.56301393331378343}},
  {"ay", 1, 2, 1, 0.7, {0.47788552633662472, 0.88173557302323903, -0.076368822281429260}, 0.97740446793673771, {1.0608369519128894, -0.63816615099571891, 0.72981578142742341}, 0.0012435990573798444, {-0.11702790878928552, 1.3131495121779050, -1.3183533768417509}},
  {"xay", 2, 3, 2, 0.7, {-0.079352670942811850, 1.0176416108698824, 0.20467362937029100}, 1.0856967602477367, {1.1617636004871663, 0.21730229738344434, 0.63001186644778925}, -0.065476884595415119, {-0.63037006565788188, 0.68273766683069190, -0.92693576852477639}}
}};

/// (s, kappa) of the cone curve generated by sinh s + s^3/20 - s^2/30.
inline constexpr std::array<std::array<double, 2>, 3> kPerturbedKappa = {{
  {-1.5, 0.39847435102729351},
  {0.3, -1.1456394750892920},
  {1.9, 0.48254095809056474}
}};

inline constexpr double kSinh1 = 1.1752011936438015;
inline constexpr double kCosh1 = 1.5430806348152438;
inline constexpr double kXYArcLength01 = 1.1613459788758234;

}  // namespace frozen
