#include "grpf/hodge.hpp"

#include <sstream>

namespace grpf {

HodgeDiamond::HodgeDiamond(int dim) : dim_(dim) {
  if (dim < 0) throw Error(ErrorKind::Dimension, "Hodge diamond of negative dimension");
}

BigInt HodgeDiamond::operator()(int p, int q) const {
  auto it = h_.find({p, q});
  return it == h_.end() ? BigInt(0) : it->second;
}

void HodgeDiamond::set(int p, int q, BigInt value) {
  if (p < 0 || q < 0 || p > dim_ || q > dim_)
    throw Error(ErrorKind::Dimension, "Hodge index out of range");
  if (value == 0)
    h_.erase({p, q});
  else
    h_[{p, q}] = std::move(value);
}

std::vector<BigInt> HodgeDiamond::middle_row() const {
  std::vector<BigInt> row;
  for (int p = dim_; p >= 0; --p) row.push_back((*this)(p, dim_ - p));
  return row;
}

BigInt HodgeDiamond::chi_p(int p) const {
  BigInt chi = 0;
  for (int q = 0; q <= dim_; ++q) chi += (q % 2 == 0) ? (*this)(p, q) : BigInt(-(*this)(p, q));
  return chi;
}

BigInt HodgeDiamond::topological_euler() const {
  BigInt chi = 0;
  for (const auto& [pq, h] : h_) chi += ((pq.first + pq.second) % 2 == 0) ? h : BigInt(-h);
  return chi;
}

std::vector<HodgeDiamond::Violation> HodgeDiamond::integrity_violations() const {
  std::vector<Violation> out;
  if (dim_ > 0 && (*this)(0, 0) != 1) out.push_back({"h00=1", 0, 0});
  for (int p = 0; p <= dim_; ++p)
    for (int q = 0; q <= dim_; ++q) {
      const auto h = (*this)(p, q);
      if (h < 0) out.push_back({"non-negative", p, q});
      if (h != (*this)(q, p)) out.push_back({"hodge-symmetry", p, q});
      if (h != (*this)(dim_ - p, dim_ - q)) out.push_back({"serre-duality", p, q});
    }
  return out;
}

std::string HodgeDiamond::str() const {
  // rows by total degree p+q, entries h^{d,0} ... h^{0,d} within a row
  std::ostringstream os;
  for (int d = 0; d <= 2 * dim_; ++d) {
    const int lo = std::max(0, d - dim_), hi = std::min(d, dim_);
    os << std::string(static_cast<std::size_t>(2 * (dim_ - (hi - lo))), ' ');
    for (int p = hi; p >= lo; --p) os << (p == hi ? "" : "   ") << (*this)(p, d - p);
    os << '\n';
  }
  return os.str();
}

}  // namespace grpf
