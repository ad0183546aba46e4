#include "acm/module.hpp"

#include <algorithm>

namespace acm {

FreeModule FreeModule::shifted(int k) const {
  FreeModule out;
  out.twists.reserve(twists.size());
  for (int a : twists) out.twists.push_back(a - k);
  return out;
}

FreeModule FreeModule::operator+(const FreeModule& other) const {
  FreeModule out = *this;
  out.twists.insert(out.twists.end(), other.twists.begin(), other.twists.end());
  return out;
}

bool degree_compatible(const Polynomial& value, int source_twist, int target_twist) {
  if (value.is_zero()) return true;
  auto d = value.degree();
  return d && *d == source_twist - target_twist;
}

GradedMap::GradedMap(RingPtr ring, FreeModule source, FreeModule target)
    : ring_(std::move(ring)), source_(std::move(source)), target_(std::move(target)) {
  entries_.assign(static_cast<std::size_t>(rows()) * cols(), Polynomial(ring_));
}

GradedMap::GradedMap(RingPtr ring, FreeModule source, FreeModule target,
                     std::vector<Polynomial> entries)
    : ring_(std::move(ring)),
      source_(std::move(source)),
      target_(std::move(target)),
      entries_(std::move(entries)) {
  if (entries_.size() != static_cast<std::size_t>(rows()) * cols()) {
    throw StructuralError("matrix entry count does not match its shape");
  }
  for (auto& e : entries_) {
    if (!e.ring()) e = Polynomial(ring_);
    require_same_ring(ring_, e.ring());
  }
  validate();
}

GradedMap GradedMap::from_columns(RingPtr ring, FreeModule source, FreeModule target,
                                  const std::vector<std::vector<Polynomial>>& columns) {
  if (columns.size() != static_cast<std::size_t>(source.rank())) {
    throw StructuralError("column count does not match the source rank");
  }
  std::vector<Polynomial> entries;
  entries.reserve(columns.size() * target.twists.size());
  for (const auto& col : columns) {
    if (col.size() != target.twists.size()) {
      throw StructuralError("column length does not match the target rank");
    }
    entries.insert(entries.end(), col.begin(), col.end());
  }
  return GradedMap(std::move(ring), std::move(source), std::move(target), std::move(entries));
}

GradedMap GradedMap::identity(RingPtr ring, const FreeModule& f) {
  GradedMap out(ring, f, f);
  for (int i = 0; i < f.rank(); ++i) out.set(i, i, Polynomial::constant(ring, 1));
  return out;
}

void GradedMap::set(int row, int col, Polynomial value) {
  if (!value.ring()) value = Polynomial(ring_);
  require_same_ring(ring_, value.ring());
  if (!degree_compatible(value, source_.twists[static_cast<std::size_t>(col)],
                         target_.twists[static_cast<std::size_t>(row)])) {
    throw DomainError("matrix entry " + value.to_string() + " has the wrong degree");
  }
  entries_[static_cast<std::size_t>(col) * rows() + row] = std::move(value);
}

std::vector<Polynomial> GradedMap::column(int col) const {
  auto begin = entries_.begin() + static_cast<std::ptrdiff_t>(col) * rows();
  return {begin, begin + rows()};
}

std::vector<Polynomial> GradedMap::row(int r) const {
  std::vector<Polynomial> out;
  out.reserve(static_cast<std::size_t>(cols()));
  for (int c = 0; c < cols(); ++c) out.push_back((*this)(r, c));
  return out;
}

GradedMap GradedMap::compose(const GradedMap& other) const {
  if (!(other.target_ == source_)) throw StructuralError("composition of incompatible maps");
  GradedMap out(ring_, other.source_, target_);
  for (int j = 0; j < other.cols(); ++j) {
    for (int k = 0; k < cols(); ++k) {
      const Polynomial& b = other(k, j);
      if (b.is_zero()) continue;
      for (int i = 0; i < rows(); ++i) {
        const Polynomial& a = (*this)(i, k);
        if (a.is_zero()) continue;
        auto& e = out.entries_[static_cast<std::size_t>(j) * out.rows() + i];
        e = e + a * b;
      }
    }
  }
  return out;
}

GradedMap GradedMap::operator+(const GradedMap& other) const {
  if (!(source_ == other.source_) || !(target_ == other.target_)) {
    throw StructuralError("sum of maps with different shapes");
  }
  GradedMap out = *this;
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] += other.entries_[i];
  return out;
}

GradedMap GradedMap::operator-(const GradedMap& other) const {
  return *this + other.scaled(ring_->field().neg(1));
}

GradedMap GradedMap::scaled(Coeff c) const {
  GradedMap out = *this;
  for (auto& e : out.entries_) e = e.scaled(c);
  return out;
}

GradedMap GradedMap::dual(int n) const {
  FreeModule src;
  FreeModule tgt;
  for (int a : target_.twists) src.twists.push_back(n - a);
  for (int a : source_.twists) tgt.twists.push_back(n - a);
  GradedMap out(ring_, src, tgt);
  for (int i = 0; i < rows(); ++i) {
    for (int j = 0; j < cols(); ++j) {
      out.entries_[static_cast<std::size_t>(i) * out.rows() + j] = (*this)(i, j);
    }
  }
  return out;
}

GradedMap GradedMap::shifted(int k) const {
  GradedMap out = *this;
  out.source_ = source_.shifted(k);
  out.target_ = target_.shifted(k);
  return out;
}

GradedMap GradedMap::submatrix(const std::vector<int>& rows_kept,
                               const std::vector<int>& cols_kept) const {
  FreeModule src;
  FreeModule tgt;
  for (int c : cols_kept) src.twists.push_back(source_.twists.at(static_cast<std::size_t>(c)));
  for (int r : rows_kept) tgt.twists.push_back(target_.twists.at(static_cast<std::size_t>(r)));
  GradedMap out(ring_, src, tgt);
  for (std::size_t j = 0; j < cols_kept.size(); ++j) {
    for (std::size_t i = 0; i < rows_kept.size(); ++i) {
      out.entries_[j * rows_kept.size() + i] = (*this)(rows_kept[i], cols_kept[j]);
    }
  }
  return out;
}

GradedMap GradedMap::hconcat(const GradedMap& a, const GradedMap& b) {
  if (!(a.target_ == b.target_)) throw StructuralError("hconcat needs a common target");
  GradedMap out(a.ring_, a.source_ + b.source_, a.target_);
  std::copy(a.entries_.begin(), a.entries_.end(), out.entries_.begin());
  std::copy(b.entries_.begin(), b.entries_.end(),
            out.entries_.begin() + static_cast<std::ptrdiff_t>(a.entries_.size()));
  return out;
}

GradedMap GradedMap::vconcat(const GradedMap& a, const GradedMap& b) {
  if (!(a.source_ == b.source_)) throw StructuralError("vconcat needs a common source");
  GradedMap out(a.ring_, a.source_, a.target_ + b.target_);
  for (int j = 0; j < a.cols(); ++j) {
    for (int i = 0; i < a.rows(); ++i) {
      out.entries_[static_cast<std::size_t>(j) * out.rows() + i] = a(i, j);
    }
    for (int i = 0; i < b.rows(); ++i) {
      out.entries_[static_cast<std::size_t>(j) * out.rows() + a.rows() + i] = b(i, j);
    }
  }
  return out;
}

GradedMap GradedMap::direct_sum(const GradedMap& a, const GradedMap& b) {
  GradedMap out(a.ring_, a.source_ + b.source_, a.target_ + b.target_);
  for (int j = 0; j < a.cols(); ++j) {
    for (int i = 0; i < a.rows(); ++i) {
      out.entries_[static_cast<std::size_t>(j) * out.rows() + i] = a(i, j);
    }
  }
  for (int j = 0; j < b.cols(); ++j) {
    for (int i = 0; i < b.rows(); ++i) {
      out.entries_[static_cast<std::size_t>(a.cols() + j) * out.rows() + a.rows() + i] = b(i, j);
    }
  }
  return out;
}

bool GradedMap::is_zero() const {
  for (const auto& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

std::optional<std::pair<int, int>> GradedMap::first_unit() const {
  for (int j = 0; j < cols(); ++j) {
    for (int i = 0; i < rows(); ++i) {
      if ((*this)(i, j).is_unit()) return std::make_pair(i, j);
    }
  }
  return std::nullopt;
}

void GradedMap::validate() const {
  for (int j = 0; j < cols(); ++j) {
    for (int i = 0; i < rows(); ++i) {
      const Polynomial& e = (*this)(i, j);
      if (!degree_compatible(e, source_.twists[static_cast<std::size_t>(j)],
                             target_.twists[static_cast<std::size_t>(i)])) {
        throw DomainError("matrix entry (" + std::to_string(i) + "," + std::to_string(j) +
                          ") = " + e.to_string() + " has the wrong degree");
      }
    }
  }
}

bool GradedMap::operator==(const GradedMap& other) const {
  if (!(source_ == other.source_) || !(target_ == other.target_)) return false;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (!(entries_[i] == other.entries_[i])) return false;
  }
  return true;
}

ModulePresentation ModulePresentation::free(RingPtr ring, FreeModule f) {
  GradedMap rel(ring, FreeModule{}, f);
  return ModulePresentation{std::move(ring), std::move(f), std::move(rel), std::nullopt};
}

ModulePresentation ModulePresentation::cokernel_of(GradedMap relations) {
  ModulePresentation m;
  m.ring = relations.ring();
  m.cover = relations.target();
  m.relations = std::move(relations);
  return m;
}

ModulePresentation ModulePresentation::shifted(int k) const {
  ModulePresentation out = *this;
  out.cover = cover.shifted(k);
  out.relations = relations.shifted(k);
  if (embedding) {
    out.embedding->ambient = embedding->ambient.shifted(k);
    out.embedding->images = embedding->images.shifted(k);
  }
  return out;
}

}  // namespace acm
