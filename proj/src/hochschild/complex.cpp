#include <limits>
#include <string>

#include "rhh/error.hpp"
#include "rhh/hochschild.hpp"

namespace rhh {

namespace {

constexpr std::size_t kTableLimit = std::size_t{1} << 24;

std::uint64_t checked_power(std::size_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base)
      throw Error(ErrorCode::ResourceBound, "tuple keys overflow at degree " + std::to_string(exp));
    r *= base;
  }
  return r;
}

}  // namespace

std::size_t CochainLayout::find_key(std::uint64_t key) const {
  if (!table_.empty() || map_.empty()) {
    if (key >= table_.size()) return npos;
    std::int32_t t = table_[key];
    return t < 0 ? npos : static_cast<std::size_t>(t);
  }
  auto it = map_.find(key);
  return it == map_.end() ? npos : static_cast<std::size_t>(it->second);
}

std::size_t CochainLayout::find(std::span<const int> tuple) const {
  if (degree_ == 0) {
    if (tuple.size() != 1) throw Error(ErrorCode::DimensionMismatch, "degree-0 lookup takes one object");
    return find_key(static_cast<std::uint64_t>(tuple[0]));
  }
  if (tuple.size() != static_cast<std::size_t>(degree_))
    throw Error(ErrorCode::DimensionMismatch, "tuple length " + std::to_string(tuple.size()) + " in degree " +
                                                  std::to_string(degree_));
  std::uint64_t key = 0;
  for (int u : tuple) key = key * dim_ + static_cast<std::uint64_t>(u);
  return find_key(key);
}

CochainComplex::CochainComplex(const FDCategory& c, Limits limits)
    : cat_(with_unit_basis(c)), limits_(limits) {
  is_identity_.assign(cat_.dim(), false);
  for (std::size_t a = 0; a < cat_.num_objects(); ++a)
    is_identity_[static_cast<std::size_t>(*cat_.unit_index(static_cast<int>(a)))] = true;
  Cochain m = zero(2);
  const auto& l = layout(2);
  for (std::size_t t = 0; t < l.num_tuples(); ++t) {
    auto tup = l.tuple(t);
    for (const auto& term : cat_.compose(tup[0], tup[1]))
      m.coeffs[l.offset(t) + static_cast<std::size_t>(cat_.local_index(term.index))] = term.coeff;
  }
  mult_ = std::make_unique<Cochain>(std::move(m));
}

const CochainLayout& CochainComplex::layout(int degree) const {
  if (degree < 0) throw Error(ErrorCode::DegreeUnderflow, "negative cochain degree " + std::to_string(degree));
  std::lock_guard lock(layout_mutex_);
  auto it = layouts_.find(degree);
  if (it != layouts_.end()) return *it->second;

  auto l = std::make_unique<CochainLayout>();
  l->degree_ = degree;
  l->dim_ = cat_.dim();
  const int k = static_cast<int>(cat_.num_objects());
  const std::size_t cap = limits_.max_cochain_dim;

  auto add_tuple = [&](std::span<const int> tup, int src, int tgt) {
    std::size_t block = cat_.hom(src, tgt).size();
    bool normal = true;
    for (int u : tup) normal = normal && !is_identity_[static_cast<std::size_t>(u)];
    l->tuples_.insert(l->tuples_.end(), tup.begin(), tup.end());
    l->offsets_.push_back(l->size_);
    l->norm_offsets_.push_back(normal ? static_cast<long>(l->normalized_size_) : -1);
    l->sources_.push_back(src);
    l->targets_.push_back(tgt);
    l->block_sizes_.push_back(block);
    l->size_ += block;
    if (normal) l->normalized_size_ += block;
    if (l->size_ > cap)
      throw Error(ErrorCode::ResourceBound, "cochain space in degree " + std::to_string(degree) + " exceeds " +
                                                std::to_string(cap) + " coefficients");
  };

  if (degree == 0) {
    for (int a = 0; a < k; ++a) {
      int obj = a;
      add_tuple({}, obj, obj);
    }
    l->table_.assign(static_cast<std::size_t>(k), 0);
    for (int a = 0; a < k; ++a) l->table_[static_cast<std::size_t>(a)] = a;
  } else {
    const std::uint64_t keyspace = checked_power(cat_.dim(), degree);
    // object tuples (a_n, ..., a_0), a_n most significant
    std::vector<int> objs(static_cast<std::size_t>(degree) + 1, 0);
    std::vector<int> tup(static_cast<std::size_t>(degree));
    std::vector<std::size_t> idx(static_cast<std::size_t>(degree));
    for (;;) {
      // u_i runs over hom(a_{n-i}, a_{n-i+1}); objs[j] holds a_{n-j}
      bool empty = false;
      for (int i = 0; i < degree; ++i) empty = empty || cat_.hom(objs[static_cast<std::size_t>(i) + 1], objs[static_cast<std::size_t>(i)]).empty();
      if (!empty) {
        std::fill(idx.begin(), idx.end(), 0);
        for (;;) {
          for (int i = 0; i < degree; ++i)
            tup[static_cast<std::size_t>(i)] = cat_.hom(objs[static_cast<std::size_t>(i) + 1], objs[static_cast<std::size_t>(i)])[idx[static_cast<std::size_t>(i)]];
          add_tuple(tup, objs.back(), objs.front());
          int i = degree - 1;
          for (; i >= 0; --i) {
            auto& blk = cat_.hom(objs[static_cast<std::size_t>(i) + 1], objs[static_cast<std::size_t>(i)]);
            if (++idx[static_cast<std::size_t>(i)] < blk.size()) break;
            idx[static_cast<std::size_t>(i)] = 0;
          }
          if (i < 0) break;
        }
      }
      int j = degree;
      for (; j >= 0; --j) {
        if (++objs[static_cast<std::size_t>(j)] < k) break;
        objs[static_cast<std::size_t>(j)] = 0;
      }
      if (j < 0) break;
    }
    auto key_of = [&](std::size_t t) {
      std::uint64_t key = 0;
      for (int u : l->tuple(t)) key = key * cat_.dim() + static_cast<std::uint64_t>(u);
      return key;
    };
    if (keyspace <= kTableLimit) {
      l->table_.assign(static_cast<std::size_t>(keyspace), -1);
      for (std::size_t t = 0; t < l->num_tuples(); ++t) l->table_[key_of(t)] = static_cast<std::int32_t>(t);
    } else {
      l->map_.reserve(l->num_tuples());
      for (std::size_t t = 0; t < l->num_tuples(); ++t) l->map_.emplace(key_of(t), static_cast<std::int32_t>(t));
    }
  }
  auto& ref = *l;
  layouts_.emplace(degree, std::move(l));
  return ref;
}

Cochain CochainComplex::zero(int degree) const {
  Cochain c;
  c.degree = degree;
  c.coeffs.assign(layout(degree).size(), 0);
  c.normalized = true;
  return c;
}

const Cochain& CochainComplex::multiplication() const { return *mult_; }

Cochain CochainComplex::unit() const {
  Cochain c = zero(0);
  const auto& l = layout(0);
  for (std::size_t a = 0; a < cat_.num_objects(); ++a) {
    int id = *cat_.unit_index(static_cast<int>(a));
    c.coeffs[l.offset(a) + static_cast<std::size_t>(cat_.local_index(id))] = 1;
  }
  return c;
}

Cochain CochainComplex::random(int degree, Rng& rng, bool normalized) const {
  Cochain c = zero(degree);
  const auto& l = layout(degree);
  std::uniform_int_distribution<Residue> dist(0, field().p() - 1);
  for (std::size_t t = 0; t < l.num_tuples(); ++t) {
    if (normalized && l.normalized_offset(t) < 0) continue;
    for (std::size_t k = 0; k < l.block_size(t); ++k) c.coeffs[l.offset(t) + k] = dist(rng);
  }
  c.normalized = normalized || degree == 0;
  return c;
}

bool CochainComplex::is_normalized(const Cochain& x) const {
  const auto& l = layout(x.degree);
  if (x.coeffs.size() != l.size()) throw Error(ErrorCode::DimensionMismatch, "cochain size does not match its degree");
  for (std::size_t t = 0; t < l.num_tuples(); ++t) {
    if (l.normalized_offset(t) >= 0) continue;
    for (std::size_t k = 0; k < l.block_size(t); ++k)
      if (x.coeffs[l.offset(t) + k] != 0) return false;
  }
  return true;
}

Vector CochainComplex::coordinates(const Cochain& x, bool normalized) const {
  const auto& l = layout(x.degree);
  if (x.coeffs.size() != l.size()) throw Error(ErrorCode::DimensionMismatch, "cochain size does not match its degree");
  if (!normalized) return x.coeffs;
  Vector v(l.normalized_size(), 0);
  for (std::size_t t = 0; t < l.num_tuples(); ++t) {
    long no = l.normalized_offset(t);
    for (std::size_t k = 0; k < l.block_size(t); ++k) {
      Residue r = x.coeffs[l.offset(t) + k];
      if (no >= 0) {
        v[static_cast<std::size_t>(no) + k] = r;
      } else if (r != 0) {
        throw Error(ErrorCode::BadParameter, "cochain of degree " + std::to_string(x.degree) +
                                                 " is nonzero on tuple " + std::to_string(t) + " containing an identity");
      }
    }
  }
  return v;
}

Cochain CochainComplex::from_coordinates(int degree, std::span<const Residue> v, bool normalized) const {
  const auto& l = layout(degree);
  Cochain c = zero(degree);
  if (!normalized) {
    if (v.size() != l.size()) throw Error(ErrorCode::DimensionMismatch, "coordinate vector has wrong length");
    c.coeffs.assign(v.begin(), v.end());
    c.normalized = degree == 0;
    return c;
  }
  if (v.size() != l.normalized_size()) throw Error(ErrorCode::DimensionMismatch, "coordinate vector has wrong length");
  for (std::size_t t = 0; t < l.num_tuples(); ++t) {
    long no = l.normalized_offset(t);
    if (no < 0) continue;
    for (std::size_t k = 0; k < l.block_size(t); ++k) c.coeffs[l.offset(t) + k] = v[static_cast<std::size_t>(no) + k];
  }
  return c;
}

const HHSpace& CochainComplex::hh(int degree, bool normalized) const {
  if (degree == 0) normalized = true;
  {
    std::lock_guard lock(space_mutex_);
    auto it = spaces_.find({degree, normalized});
    if (it != spaces_.end()) return *it->second;
  }
  auto s = std::make_unique<HHSpace>(cohomology(*this, degree, normalized));
  std::lock_guard lock(space_mutex_);
  auto [it, inserted] = spaces_.emplace(std::pair{degree, normalized}, std::move(s));
  return *it->second;
}

namespace {

void check_same(const Cochain& a, const Cochain& b) {
  if (a.degree != b.degree || a.coeffs.size() != b.coeffs.size())
    throw Error(ErrorCode::DimensionMismatch, "cochains of degrees " + std::to_string(a.degree) + " and " +
                                                  std::to_string(b.degree));
}

}  // namespace

Cochain CochainComplex::axpy(const Cochain& a, const Cochain& b, Residue c) const {
  check_same(a, b);
  Cochain r = a;
  rhh::axpy(field(), r.coeffs, b.coeffs, c % field().p());
  r.normalized = a.normalized && b.normalized;
  return r;
}

Cochain CochainComplex::add(const Cochain& a, const Cochain& b) const { return axpy(a, b, 1); }

Cochain CochainComplex::sub(const Cochain& a, const Cochain& b) const { return axpy(a, b, field().p() - 1); }

Cochain CochainComplex::scale(const Cochain& a, Residue c) const {
  Cochain r = a;
  rhh::scale(field(), r.coeffs, c % field().p());
  return r;
}

// ---------------------------------------------------------------- restriction

Restriction::Restriction(const CochainComplex& big, std::span<const int> objects)
    : big_(&big), objects_(objects.begin(), objects.end()) {
  FDCategory sub = full_subcategory(big.category(), objects);
  embedding_ = subcategory_embedding(big.category(), objects);
  small_ = std::make_unique<CochainComplex>(sub, big.limits());
}

Cochain Restriction::apply(const Cochain& x) const {
  const auto& lb = big_->layout(x.degree);
  const auto& ls = small_->layout(x.degree);
  if (x.coeffs.size() != lb.size()) throw Error(ErrorCode::DimensionMismatch, "cochain size does not match its degree");
  Cochain r = small_->zero(x.degree);
  r.normalized = x.normalized;
  std::vector<int> mapped(static_cast<std::size_t>(x.degree));
  for (std::size_t t = 0; t < ls.num_tuples(); ++t) {
    std::size_t tb;
    if (x.degree == 0) {
      int obj = objects_[t];
      tb = lb.find(std::span<const int>(&obj, 1));
    } else {
      auto tup = ls.tuple(t);
      for (std::size_t i = 0; i < tup.size(); ++i) mapped[i] = embedding_[static_cast<std::size_t>(tup[i])];
      tb = lb.find(mapped);
    }
    for (std::size_t k = 0; k < ls.block_size(t); ++k) r.coeffs[ls.offset(t) + k] = x.coeffs[lb.offset(tb) + k];
  }
  return r;
}

}  // namespace rhh
