#include "lagsob/golden.hpp"

namespace lagsob {

namespace {

Rational q(const char* s) { return parse_rational(s); }

WorkedExample make() {
  WorkedExample w;
  w.spec = SobolevSpec{3, 3, RationalMatrix{{1, 1, 0}, {1, 1, 0}, {0, 0, 1}}};
  w.S = Poly::constant(1);

  // R_1 = -(x+1)(x+2)(x^2-x-24)/24
  w.R.push_back(Poly{1, 1} * Poly{2, 1} * Poly{-24, -1, 1} * q("-1/24"));
  // R_2 = -(x+1)(x^3+x^2-14x-48)/24
  w.R.push_back(Poly{1, 1} * Poly{-48, -14, 1, 1} * q("-1/24"));
  // R_3 = (x+4)(x^4+x^3+x^2-9x+30)/60
  w.R.push_back(Poly{4, 1} * Poly{30, -9, 1, 1, 1} * q("1/60"));

  w.omega = Poly{q("-2"), q("-22/5"), q("1333/360"), q("-71/40"), q("613/1440"), q("3/20"), q("-91/720"),
                 q("1/40"), q("-1/480")};
  w.PS = Poly{q("0"),   q("-18/5"),  q("-289/360"), q("55/108"), q("-253/1440"),
              q("47/480"), q("-17/720"), q("-1/144"),   q("1/480"),  q("-1/4320")};
  w.Mh.push_back(Poly{q("12"), q("152/5"), q("1553/60"), q("87/8"), q("29/24"), q("-11/40"), q("-11/120")});
  w.Mh.push_back(Poly{q("-14"), q("-369/10"), q("-512/15"), q("-131/8"), q("-71/24"), q("11/40"), q("11/120")});
  w.Mh.push_back(Poly{q("-7"), q("-3"), q("-3"), q("-2")});

  w.order = 18;
  w.awr = 8;
  w.nj = {5, 4, 0};
  w.mj = {2, 0};
  return w;
}

}  // namespace

const WorkedExample& worked_example() {
  static const WorkedExample w = make();
  return w;
}

}  // namespace lagsob
