#ifndef CROWNVOL_REFERENCE_TABLES_HPP
#define CROWNVOL_REFERENCE_TABLES_HPP

#include <crownvol/symbolic.hpp>

#include <vector>

namespace crownvol {

/// Published closed forms used as fixed regression targets.
struct AnnulusEntry {
  int a1;
  int a2;
  SymbolicValue volume;
};

namespace detail {
// c * pi^p * g, with g one of log 2 (j = 0) or zeta(j)
inline SymbolicValue tpz(Rational c, int p, int j) {
  return sym_pi(p) * (j == 0 ? sym_log2() : sym_zeta(j)) * c;
}
}  // namespace detail

inline std::vector<AnnulusEntry> annulus_reference_table() {
  using detail::tpz;
  return {
      {1, 1, tpz(1, 0, 0)},
      {1, 2, tpz(ratio(7, 4), 0, 3)},
      {1, 3, tpz(ratio(1, 2), 2, 0) + tpz(ratio(9, 4), 0, 3)},
      {1, 4, tpz(ratio(7, 6), 2, 3) + tpz(ratio(31, 8), 0, 5)},
      {1, 5, tpz(ratio(3, 8), 4, 0) + tpz(ratio(15, 8), 2, 3) + tpz(ratio(75, 16), 0, 5)},
      {1, 6, tpz(ratio(14, 15), 4, 3) + tpz(ratio(31, 8), 2, 5) + tpz(ratio(381, 64), 0, 7)},
      {1, 7, tpz(ratio(5, 16), 6, 0) + tpz(ratio(259, 160), 4, 3) + tpz(ratio(175, 32), 2, 5) + tpz(ratio(441, 64), 0, 7)},
      {1, 8, tpz(ratio(4, 5), 6, 3) + tpz(ratio(217, 60), 4, 5) + tpz(ratio(127, 16), 2, 7) + tpz(ratio(511, 64), 0, 9)},
      {1, 9, tpz(ratio(35, 128), 8, 0) + tpz(ratio(3229, 2240), 6, 3) + tpz(ratio(705, 128), 4, 5) +
                 tpz(ratio(1323, 128), 2, 7) + tpz(ratio(2295, 256), 0, 9)},
      {1, 10, tpz(ratio(32, 45), 8, 3) + tpz(ratio(1271, 378), 6, 5) + tpz(ratio(1651, 192), 4, 7) +
                  tpz(ratio(2555, 192), 2, 9) + tpz(ratio(10235, 1024), 0, 11)},
      {1, 11, tpz(ratio(63, 256), 10, 0) + tpz(ratio(117469, 89600), 8, 3) + tpz(ratio(86405, 16128), 6, 5) +
                  tpz(ratio(30723, 2560), 4, 7) + tpz(ratio(8415, 512), 2, 9) + tpz(ratio(11253, 1024), 0, 11)},
      {1, 12, tpz(ratio(64, 99), 10, 3) + tpz(ratio(14849, 4725), 8, 5) + tpz(ratio(17653, 2016), 6, 7) +
                  tpz(ratio(15841, 960), 4, 9) + tpz(ratio(10235, 512), 2, 11) + tpz(ratio(24573, 2048), 0, 13)},
      {2, 2, tpz(6, 0, 3)},
      {2, 3, tpz(ratio(7, 8), 2, 3) + tpz(ratio(93, 8), 0, 5)},
      {2, 4, tpz(4, 2, 3) + tpz(20, 0, 5)},
      {2, 5, tpz(ratio(21, 32), 4, 3) + tpz(ratio(155, 16), 2, 5) + tpz(ratio(1905, 64), 0, 7)},
      {3, 3, tpz(ratio(1, 4), 4, 0) + tpz(ratio(9, 4), 2, 3) + tpz(ratio(225, 8), 0, 5)},
      {3, 4, tpz(ratio(7, 12), 4, 3) + tpz(ratio(155, 16), 2, 5) + tpz(ratio(1905, 32), 0, 7)},
  };
}

/// Exact n-gon volumes for n = 3..8.
inline std::vector<std::pair<int, SymbolicValue>> ngon_reference_table() {
  return {
      {3, SymbolicValue(Rational(1))},
      {4, SymbolicValue(Rational(1))},
      {5, sym_pi(2) * ratio(1, 6)},
      {6, sym_pi(2) * ratio(1, 3)},
      {7, sym_pi(4) * ratio(3, 40)},
      {8, sym_pi(4) * ratio(8, 45)},
  };
}

}  // namespace crownvol

#endif  // CROWNVOL_REFERENCE_TABLES_HPP
