#include "acm/resolve.hpp"

#include <algorithm>
#include <sstream>

namespace acm {

// ---------------------------------------------------------------------------
// Betti tables

BettiTable BettiTable::from_modules(const std::vector<FreeModule>& modules, int first_index) {
  BettiTable t;
  for (std::size_t i = 0; i < modules.size(); ++i) {
    for (int a : modules[i].twists) t.add(first_index + static_cast<int>(i), a, 1);
  }
  return t;
}

int BettiTable::at(int i, int a) const {
  auto it = entries_.find({i, a});
  return it == entries_.end() ? 0 : it->second;
}

int BettiTable::total(int i) const {
  int n = 0;
  for (const auto& [key, count] : entries_) {
    if (key.first == i) n += count;
  }
  return n;
}

int BettiTable::min_index() const { return entries_.empty() ? 0 : entries_.begin()->first.first; }

int BettiTable::max_index() const { return entries_.empty() ? -1 : entries_.rbegin()->first.first; }

void BettiTable::add(int i, int a, int count) {
  if (count == 0) return;
  int& slot = entries_[{i, a}];
  slot += count;
  if (slot == 0) entries_.erase({i, a});
}

BettiTable BettiTable::shifted(int k) const {
  BettiTable t;
  for (const auto& [key, count] : entries_) t.add(key.first, key.second - k, count);
  return t;
}

BettiTable BettiTable::from_index(int first) const {
  BettiTable t;
  for (const auto& [key, count] : entries_) {
    if (key.first >= first) t.add(key.first, key.second, count);
  }
  return t;
}

BettiTable BettiTable::operator+(const BettiTable& other) const {
  BettiTable t = *this;
  for (const auto& [key, count] : other.entries_) t.add(key.first, key.second, count);
  return t;
}

std::string BettiTable::render() const {
  if (entries_.empty()) return "total:\n";
  int lo = min_index();
  int hi = max_index();
  int row_lo = entries_.begin()->first.second - entries_.begin()->first.first;
  int row_hi = row_lo;
  for (const auto& [key, count] : entries_) {
    row_lo = std::min(row_lo, key.second - key.first);
    row_hi = std::max(row_hi, key.second - key.first);
  }
  auto cell = [&](int i, int row) {
    int v = at(i, row + i);
    return v == 0 ? std::string(".") : std::to_string(v);
  };
  std::vector<std::size_t> width;
  for (int i = lo; i <= hi; ++i) {
    std::size_t w = std::max(std::to_string(i).size(), std::to_string(total(i)).size());
    for (int row = row_lo; row <= row_hi; ++row) w = std::max(w, cell(i, row).size());
    width.push_back(w);
  }
  std::size_t label = std::string("total:").size();
  for (int row = row_lo; row <= row_hi; ++row) label = std::max(label, std::to_string(row).size() + 1);

  std::ostringstream os;
  auto pad = [&](const std::string& s, std::size_t w) {
    os << std::string(w > s.size() ? w - s.size() : 0, ' ') << s;
  };
  pad("", label);
  for (int i = lo; i <= hi; ++i) {
    os << ' ';
    pad(std::to_string(i), width[static_cast<std::size_t>(i - lo)]);
  }
  os << '\n';
  pad("total:", label);
  for (int i = lo; i <= hi; ++i) {
    os << ' ';
    pad(std::to_string(total(i)), width[static_cast<std::size_t>(i - lo)]);
  }
  os << '\n';
  for (int row = row_lo; row <= row_hi; ++row) {
    pad(std::to_string(row) + ":", label);
    for (int i = lo; i <= hi; ++i) {
      os << ' ';
      pad(cell(i, row), width[static_cast<std::size_t>(i - lo)]);
    }
    os << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Resolutions

int Resolution::length() const {
  for (int i = static_cast<int>(modules.size()) - 1; i >= 0; --i) {
    if (!modules[static_cast<std::size_t>(i)].empty()) return i;
  }
  return -1;
}

bool Resolution::is_complex() const {
  for (std::size_t i = 0; i + 1 < maps.size(); ++i) {
    if (!maps[i].compose(maps[i + 1]).is_zero()) return false;
  }
  return true;
}

bool Resolution::has_no_units() const {
  for (const auto& m : maps) {
    if (m.first_unit()) return false;
  }
  return true;
}

BettiTable Resolution::betti(int first_index) const {
  return BettiTable::from_modules(modules, first_index);
}

Resolution free_resolution(const ModulePresentation& m, int max_len) {
  const RingPtr& ring = m.ring;
  if (max_len < 0) max_len = ring->nvars();
  Resolution res;
  res.ring = ring;
  res.modules.push_back(m.cover);
  ModulePtr ambient = OrderedModule::term_over_position(ring, m.cover);
  std::vector<FreeElem> cols;
  for (int j = 0; j < m.relations.cols(); ++j) {
    FreeElem e = FreeElem::from_components(ambient, m.relations.column(j));
    if (!e.is_zero()) cols.push_back(std::move(e));
  }
  std::vector<FreeElem> basis = buchberger(ambient, cols).elements();
  while (!basis.empty()) {
    if (static_cast<int>(res.maps.size()) == max_len) {
      res.complete = false;
      break;
    }
    SyzygyResult sr = schreyer_syzygies(ambient, std::move(basis));
    FreeModule f;
    std::vector<std::vector<Polynomial>> columns;
    for (const auto& g : sr.generators) {
      f.twists.push_back(g.degree());
      columns.push_back(g.components());
    }
    res.maps.push_back(GradedMap::from_columns(ring, f, res.modules.back(), columns));
    res.modules.push_back(std::move(f));
    ambient = sr.module;
    basis = std::move(sr.syzygies);
  }
  return res;
}

Resolution resolve_quotient(const RingPtr& ring, const std::vector<Polynomial>& gens, int max_len) {
  std::vector<std::vector<Polynomial>> cols;
  FreeModule src;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    auto d = g.degree();
    if (!d) throw DomainError("generator " + g.to_string() + " is not homogeneous");
    src.twists.push_back(*d);
    cols.push_back({g});
  }
  GradedMap rel = GradedMap::from_columns(ring, src, FreeModule{{0}}, cols);
  return free_resolution(ModulePresentation::cokernel_of(rel), max_len);
}

namespace {

std::map<int, long long> twist_sum(const Resolution& res) {
  std::map<int, long long> out;
  for (std::size_t i = 0; i < res.modules.size(); ++i) {
    long long sign = i % 2 == 0 ? 1 : -1;
    for (int a : res.modules[i].twists) {
      out[a] += sign;
      if (out[a] == 0) out.erase(a);
    }
  }
  return out;
}

std::vector<int> all_but(int n, int skip) {
  std::vector<int> out;
  for (int i = 0; i < n; ++i) {
    if (i != skip) out.push_back(i);
  }
  return out;
}

// One Gaussian cancellation on maps[i] at the unit entry (r, c).
void cancel_unit(Resolution& res, std::size_t i, int r, int c) {
  const GradedMap& d = res.maps[i];
  const PrimeField& k = res.ring->field();
  Coeff uinv = k.inv(d(r, c).lead().coeff);
  GradedMap updated = d;
  for (int j = 0; j < d.cols(); ++j) {
    if (j == c || d(r, j).is_zero()) continue;
    Polynomial factor = d(r, j).scaled(k.neg(uinv));
    for (int s = 0; s < d.rows(); ++s) {
      if (s == r || d(s, c).is_zero()) continue;
      updated.set(s, j, d(s, j) + d(s, c) * factor);
    }
  }
  res.maps[i] = updated.submatrix(all_but(d.rows(), r), all_but(d.cols(), c));
  if (i + 1 < res.maps.size()) {
    const GradedMap& next = res.maps[i + 1];
    res.maps[i + 1] = next.submatrix(all_but(next.rows(), c), all_but(next.cols(), -1));
  }
  if (i > 0) {
    const GradedMap& prev = res.maps[i - 1];
    res.maps[i - 1] = prev.submatrix(all_but(prev.rows(), -1), all_but(prev.cols(), r));
  }
  auto& lower = res.modules[i].twists;
  lower.erase(lower.begin() + r);
  auto& upper = res.modules[i + 1].twists;
  upper.erase(upper.begin() + c);
}

}  // namespace

Resolution minimalize(const Resolution& res) {
  Resolution out = res;
  for (std::size_t i = 0; i < out.maps.size(); ++i) {
    while (auto unit = out.maps[i].first_unit()) cancel_unit(out, i, unit->first, unit->second);
  }
  while (out.modules.size() > 1 && out.modules.back().empty()) {
    out.modules.pop_back();
    out.maps.pop_back();
  }
  if (twist_sum(out) != twist_sum(res)) {
    throw StructuralError("minimalization changed the Hilbert series");
  }
  out.minimal = true;
  return out;
}

BettiTable ideal_betti(const Resolution& quotient_res) {
  const Resolution& m = quotient_res.minimal ? quotient_res : minimalize(quotient_res);
  return m.betti(0).from_index(1);
}

BettiTable module_betti(const Resolution& res) {
  if (res.minimal) return res.betti(1);
  return minimalize(res).betti(1);
}

// ---------------------------------------------------------------------------
// Chain maps and cones

namespace {

const FreeModule& module_at(const Resolution& res, std::size_t j) {
  static const FreeModule kZero;
  return j < res.modules.size() ? res.modules[j] : kZero;
}

GradedMap map_at(const Resolution& res, std::size_t j) {
  // d_j: F_j -> F_{j-1}
  if (j >= 1 && j - 1 < res.maps.size()) return res.maps[j - 1];
  return GradedMap(res.ring, module_at(res, j), j == 0 ? FreeModule{} : module_at(res, j - 1));
}

}  // namespace

std::vector<GradedMap> lift_chain_map(const GradedMap& gamma0, const Resolution& resP,
                                      const Resolution& resN) {
  if (!(gamma0.source() == module_at(resP, 0)) || !(gamma0.target() == module_at(resN, 0))) {
    throw StructuralError("chain map does not match the resolutions");
  }
  const RingPtr& ring = resP.ring;
  std::vector<GradedMap> gammas{gamma0};
  for (std::size_t j = 1; j < resP.modules.size(); ++j) {
    GradedMap rhs = gammas[j - 1].compose(map_at(resP, j));
    const FreeModule& target = module_at(resN, j);
    GradedMap gamma(ring, module_at(resP, j), target);
    if (!rhs.is_zero()) {
      if (target.empty()) {
        if (j == 1) throw ConstructionError("not a homomorphism into N");
        throw StructuralError("chain map lifting failed: target resolution is not exact");
      }
      ImageSolver solver(map_at(resN, j));
      std::vector<std::vector<Polynomial>> cols;
      for (int c = 0; c < rhs.cols(); ++c) {
        auto x = solver.solve(rhs.column(c));
        if (!x) {
          if (j == 1) throw ConstructionError("not a homomorphism into N");
          throw StructuralError("chain map lifting failed: target resolution is not exact");
        }
        cols.push_back(std::move(*x));
      }
      gamma = GradedMap::from_columns(ring, module_at(resP, j), target, cols);
    }
    gammas.push_back(std::move(gamma));
  }
  return gammas;
}

Resolution mapping_cone(const std::vector<GradedMap>& gammas, const Resolution& resP,
                        const Resolution& resN) {
  const RingPtr& ring = resN.ring;
  auto gamma_at = [&](std::size_t j) {
    if (j < gammas.size()) return gammas[j];
    return GradedMap(ring, module_at(resP, j), module_at(resN, j));
  };
  for (std::size_t j = 1; j < resP.modules.size(); ++j) {
    GradedMap left = map_at(resN, j).compose(gamma_at(j));
    GradedMap right = gamma_at(j - 1).compose(map_at(resP, j));
    if (!(left == right)) throw StructuralError("invalid chain map: squares do not commute");
  }
  std::size_t top = std::max(resN.modules.size(), resP.modules.size() + 1);
  Resolution cone;
  cone.ring = ring;
  cone.modules.push_back(module_at(resN, 0));
  for (std::size_t j = 1; j < top; ++j) {
    cone.modules.push_back(module_at(resP, j - 1) + module_at(resN, j));
    GradedMap bottom_left = gamma_at(j - 1);
    if (j % 2 == 0) bottom_left = bottom_left.scaled(ring->field().neg(1));
    GradedMap bottom = GradedMap::hconcat(bottom_left, map_at(resN, j));
    if (j == 1) {
      cone.maps.push_back(bottom);
    } else {
      GradedMap top_right(ring, module_at(resN, j), module_at(resP, j - 2));
      GradedMap upper = GradedMap::hconcat(map_at(resP, j - 1), top_right);
      cone.maps.push_back(GradedMap::vconcat(upper, bottom));
    }
  }
  while (cone.modules.size() > 1 && cone.modules.back().empty()) {
    cone.modules.pop_back();
    cone.maps.pop_back();
  }
  if (!cone.is_complex()) throw StructuralError("mapping cone is not a complex");
  return cone;
}

// ---------------------------------------------------------------------------
// Koszul complexes and tensor products

namespace {

void subsets(int n, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

Resolution koszul_complex(const RingPtr& ring, const std::vector<Polynomial>& forms) {
  const int t = static_cast<int>(forms.size());
  std::vector<int> deg;
  for (const auto& f : forms) {
    if (f.is_zero()) throw DomainError("Koszul complex of a zero form");
    auto d = f.degree();
    if (!d) throw DomainError("form " + f.to_string() + " is not homogeneous");
    deg.push_back(*d);
  }
  std::vector<std::vector<std::vector<int>>> bases(static_cast<std::size_t>(t + 1));
  Resolution res;
  res.ring = ring;
  for (int j = 0; j <= t; ++j) {
    std::vector<int> cur;
    subsets(t, j, 0, cur, bases[static_cast<std::size_t>(j)]);
    FreeModule f;
    for (const auto& s : bases[static_cast<std::size_t>(j)]) {
      int a = 0;
      for (int x : s) a += deg[static_cast<std::size_t>(x)];
      f.twists.push_back(a);
    }
    res.modules.push_back(std::move(f));
  }
  for (int j = 1; j <= t; ++j) {
    const auto& src = bases[static_cast<std::size_t>(j)];
    const auto& tgt = bases[static_cast<std::size_t>(j - 1)];
    GradedMap d(ring, res.modules[static_cast<std::size_t>(j)],
                res.modules[static_cast<std::size_t>(j - 1)]);
    for (std::size_t c = 0; c < src.size(); ++c) {
      for (std::size_t k = 0; k < src[c].size(); ++k) {
        std::vector<int> face = src[c];
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(k));
        auto row = std::find(tgt.begin(), tgt.end(), face) - tgt.begin();
        Polynomial f = forms[static_cast<std::size_t>(src[c][k])];
        d.set(static_cast<int>(row), static_cast<int>(c), k % 2 == 0 ? f : -f);
      }
    }
    res.maps.push_back(std::move(d));
  }
  return res;
}

TensorComplex tensor_complexes(const Resolution& a, const Resolution& b) {
  const RingPtr& ring = a.ring;
  require_same_ring(ring, b.ring);
  const int la = static_cast<int>(a.modules.size()) - 1;
  const int lb = static_cast<int>(b.modules.size()) - 1;
  TensorComplex out;
  out.complex.ring = ring;
  for (int h = 0; h <= la + lb; ++h) {
    std::vector<TensorBlock> blocks;
    FreeModule f;
    for (int i = 0; i <= la; ++i) {
      int j = h - i;
      if (j < 0 || j > lb) continue;
      const auto& ai = a.modules[static_cast<std::size_t>(i)].twists;
      const auto& bj = b.modules[static_cast<std::size_t>(j)].twists;
      blocks.push_back({i, j, f.rank(), static_cast<int>(ai.size() * bj.size())});
      for (int x : ai) {
        for (int y : bj) f.twists.push_back(x + y);
      }
    }
    out.complex.modules.push_back(std::move(f));
    out.blocks.push_back(std::move(blocks));
  }
  auto find_block = [&](int h, int i, int j) -> const TensorBlock* {
    for (const auto& blk : out.blocks[static_cast<std::size_t>(h)]) {
      if (blk.i == i && blk.j == j) return &blk;
    }
    return nullptr;
  };
  const PrimeField& k = ring->field();
  for (int h = 1; h <= la + lb; ++h) {
    GradedMap d(ring, out.complex.modules[static_cast<std::size_t>(h)],
                out.complex.modules[static_cast<std::size_t>(h - 1)]);
    for (const auto& blk : out.blocks[static_cast<std::size_t>(h)]) {
      const int rb = b.modules[static_cast<std::size_t>(blk.j)].rank();
      const int ra = a.modules[static_cast<std::size_t>(blk.i)].rank();
      for (int p = 0; p < ra; ++p) {
        for (int q = 0; q < rb; ++q) {
          int col = blk.offset + p * rb + q;
          if (blk.i >= 1) {
            const TensorBlock* low = find_block(h - 1, blk.i - 1, blk.j);
            const GradedMap& da = a.maps[static_cast<std::size_t>(blk.i - 1)];
            for (int p2 = 0; p2 < da.rows(); ++p2) {
              if (!da(p2, p).is_zero()) d.set(low->offset + p2 * rb + q, col, da(p2, p));
            }
          }
          if (blk.j >= 1) {
            const TensorBlock* low = find_block(h - 1, blk.i, blk.j - 1);
            const GradedMap& db = b.maps[static_cast<std::size_t>(blk.j - 1)];
            const int rb2 = db.rows();
            Coeff sign = blk.i % 2 == 0 ? 1 : k.neg(1);
            for (int q2 = 0; q2 < rb2; ++q2) {
              if (!db(q2, q).is_zero()) d.set(low->offset + p * rb2 + q2, col, db(q2, q).scaled(sign));
            }
          }
        }
      }
    }
    out.complex.maps.push_back(std::move(d));
  }
  return out;
}

}  // namespace acm
