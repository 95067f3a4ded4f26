#include "mixbeau/surfaces.hpp"

#include <boost/rational.hpp>

namespace mixbeau {

namespace {

using Q = boost::rational<std::int64_t>;

std::int64_t integral(const Q& q, const char* what) {
  if (q.denominator() != 1)
    throw std::logic_error(std::string(what) + " is not an integer: " + std::to_string(q.numerator()) + "/" +
                           std::to_string(q.denominator()));
  return q.numerator();
}

}  // namespace

SurfaceInvariants invariants_from_orders(std::size_t order_h, const std::array<std::uint64_t, 3>& orders) {
  Q bracket{1};
  for (auto o : orders) {
    if (o == 0) throw std::invalid_argument("element orders must be positive");
    bracket -= Q(1, std::int64_t(o));
  }
  if (bracket <= 0) {
    std::string msg = "degenerate signature (";
    for (std::size_t i = 0; i < 3; ++i) msg += (i ? "," : "") + std::to_string(orders[i]);
    throw DegenerateSignature(msg + "): 1 - sum 1/ord = " + std::to_string(bracket.numerator()) + "/" +
                              std::to_string(bracket.denominator()));
  }
  const Q h{std::int64_t(order_h)};

  SurfaceInvariants s;
  s.order_h = order_h;
  s.orders = orders;
  s.nu = orders[0] * orders[1] * orders[2];
  const Q genus = 1 + h / 2 * bracket;
  s.genus = integral(genus, "genus");
  const Q e_from_genus = 4 * (genus - 1) * (genus - 1) / h;
  const Q e_from_orders = h * bracket * bracket;
  if (e_from_genus != e_from_orders) throw std::logic_error("the two Euler number formulas disagree");
  s.euler = integral(e_from_orders, "Euler number");
  s.chi = integral(e_from_orders / 4, "chi");
  s.k_squared = integral(Q(8) * s.chi, "K^2");
  return s;
}

SurfaceInvariants invariants(const BeauvilleTriple& u) {
  if (!check_a(u)) throw std::invalid_argument("invariants: T does not generate H");
  return invariants_from_orders(u.h->order(),
                                {element_order(u.t0), element_order(u.t1), element_order(elem_mul(u.t0, u.t1))});
}

}  // namespace mixbeau
