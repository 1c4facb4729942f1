#include "dynkin_ar/quiverrep.hpp"

namespace dar {

HomExtTables compute_hom_ext_tables(const RootSystem& rs,
                                    const std::vector<Rep<Rat>>& modules) {
  require(static_cast<int>(modules.size()) == rs.N, "DimensionMismatch",
          "need one module per positive root");
  HomExtTables t;
  t.size = rs.N;
  t.hom.assign(static_cast<std::size_t>(rs.N) * rs.N, 0);
  t.ext.assign(static_cast<std::size_t>(rs.N) * rs.N, 0);
  for (int k = 1; k <= rs.N; ++k)
    for (int l = 1; l <= rs.N; ++l) {
      int h = hom_dim(modules[k - 1], modules[l - 1]);
      long e = h - rep_euler(modules[k - 1], modules[l - 1]);
      require(e >= 0, "InternalCheckFailed", "negative ext dimension in table");
      t.hom[static_cast<std::size_t>(k - 1) * rs.N + (l - 1)] = h;
      t.ext[static_cast<std::size_t>(k - 1) * rs.N + (l - 1)] = static_cast<int>(e);
    }
  return t;
}

HomExtTables compute_hom_ext_tables(const RootSystem& rs) {
  return compute_hom_ext_tables(rs, all_indecomposables<Rat>(rs));
}

}  // namespace dar
