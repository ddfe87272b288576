#include "twinbuild/matrix.hpp"

namespace tb {

LaurentMatrix star(const LaurentMatrix& m) { return iota(m).transpose(); }

LaurentMatrix sharp(const LaurentMatrix& m) { return iota(m).transpose().inverted_variable(); }

bool is_special(const LaurentMatrix& m) {
  LaurentPoly d = m.det();
  return d == LaurentPoly(GaussRat(1));
}

bool is_iota_fixed(const LaurentMatrix& m) { return iota(m) == m; }

LaurentMatrix elementary(int n, int i, int j, const LaurentPoly& c) {
  LaurentMatrix e(n);
  e(i, j) = c;
  return e;
}

}  // namespace tb
