#include "cyclocode/cosets.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "cyclocode/error.hpp"
#include "cyclocode/params.hpp"
#include "cyclocode/qadic.hpp"

namespace cyclocode {

namespace {

std::uint64_t universe_size(unsigned q, unsigned m, std::uint64_t cap) {
  if (q < 2 || m < 1) throw ParameterError("defining sets need q >= 2 and m >= 1");
  if (!pow_at_most(q, m, cap)) {
    std::ostringstream os;
    os << q << "^" << m << " indices exceed the materialization cap of " << cap;
    throw ResourceError(os.str());
  }
  return checked_pow(q, m);
}

// Multiplication by q mod n as a digit rotation; fixes 0 and n.
std::uint64_t times_q(std::uint64_t s, unsigned q, std::uint64_t top_weight) {
  const std::uint64_t high = s / top_weight;
  return (s % top_weight) * q + high;
}

}  // namespace

DefiningSet::DefiningSet(unsigned q, unsigned m, std::uint64_t cap)
    : q_(q), m_(m), universe_(universe_size(q, m, cap)), bits_((universe_ + 63) / 64, 0) {}

DefiningSet DefiningSet::full(unsigned q, unsigned m, std::uint64_t cap) {
  DefiningSet d(q, m, cap);
  std::fill(d.bits_.begin(), d.bits_.end(), ~std::uint64_t{0});
  if (d.universe_ % 64 != 0) d.bits_.back() = (std::uint64_t{1} << (d.universe_ % 64)) - 1;
  d.count_ = d.universe_;
  return d;
}

void DefiningSet::check_index(std::uint64_t s) const {
  if (s >= universe_) {
    std::ostringstream os;
    os << "index " << s << " outside [0, " << universe_ - 1 << "]";
    throw ParameterError(os.str());
  }
}

void DefiningSet::check_compatible(const DefiningSet& other) const {
  if (q_ != other.q_ || m_ != other.m_)
    throw ParameterError("defining sets over different (q, m)");
}

void DefiningSet::insert(std::uint64_t s) {
  check_index(s);
  auto& word = bits_[s >> 6];
  const auto mask = std::uint64_t{1} << (s & 63);
  if ((word & mask) == 0) {
    word |= mask;
    ++count_;
  }
}

void DefiningSet::erase(std::uint64_t s) {
  check_index(s);
  auto& word = bits_[s >> 6];
  const auto mask = std::uint64_t{1} << (s & 63);
  if ((word & mask) != 0) {
    word &= ~mask;
    --count_;
  }
}

std::vector<std::uint64_t> DefiningSet::members() const {
  std::vector<std::uint64_t> out;
  out.reserve(count_);
  for (std::size_t w = 0; w < bits_.size(); ++w) {
    auto bits = bits_[w];
    while (bits != 0) {
      out.push_back(w * 64 + static_cast<unsigned>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

std::uint64_t DefiningSet::first_missing() const {
  for (std::size_t w = 0; w < bits_.size(); ++w) {
    if (bits_[w] != ~std::uint64_t{0}) {
      const auto s = w * 64 + static_cast<unsigned>(std::countr_one(bits_[w]));
      return std::min<std::uint64_t>(s, universe_);
    }
  }
  return universe_;
}

DefiningSet& DefiningSet::operator|=(const DefiningSet& other) {
  check_compatible(other);
  count_ = 0;
  for (std::size_t w = 0; w < bits_.size(); ++w) {
    bits_[w] |= other.bits_[w];
    count_ += static_cast<unsigned>(std::popcount(bits_[w]));
  }
  return *this;
}

bool DefiningSet::operator==(const DefiningSet& other) const {
  return q_ == other.q_ && m_ == other.m_ && bits_ == other.bits_;
}

bool DefiningSet::is_subset_of(const DefiningSet& other) const {
  check_compatible(other);
  for (std::size_t w = 0; w < bits_.size(); ++w)
    if ((bits_[w] & ~other.bits_[w]) != 0) return false;
  return true;
}

CyclotomicCoset coset_of(std::uint64_t s, unsigned q, unsigned m) {
  const auto universe = checked_pow(q, m);
  if (s >= universe) {
    std::ostringstream os;
    os << "coset_of: " << s << " outside [0, " << universe - 1 << "]";
    throw ParameterError(os.str());
  }
  const auto top_weight = universe / q;
  CyclotomicCoset c;
  auto x = s;
  do {
    c.elements.push_back(x);
    x = times_q(x, q, top_weight);
  } while (x != s);
  std::sort(c.elements.begin(), c.elements.end());
  c.leader = c.elements.front();
  return c;
}

std::uint64_t leader(std::uint64_t s, unsigned q, unsigned m) { return coset_of(s, q, m).leader; }

DefiningSet union_cosets(std::span<const std::uint64_t> seeds, unsigned q, unsigned m,
                         std::uint64_t cap) {
  DefiningSet d(q, m, cap);
  const auto top_weight = d.universe() / q;
  for (auto s : seeds) {
    if (s >= d.universe()) {
      std::ostringstream os;
      os << "union_cosets: seed " << s << " outside [0, " << d.n() << "]";
      throw ParameterError(os.str());
    }
    if (d.contains(s)) continue;
    auto x = s;
    do {
      d.insert(x);
      x = times_q(x, q, top_weight);
    } while (x != s);
  }
  return d;
}

bool is_rotation_closed(const DefiningSet& d) {
  const auto top_weight = d.universe() / d.radix();
  for (auto s : d.members())
    if (!d.contains(times_q(s, d.radix(), top_weight))) return false;
  return true;
}

}  // namespace cyclocode
