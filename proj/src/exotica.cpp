#include "slicecert/exotica.hpp"

#include <algorithm>
#include <cstdlib>

#include "slicecert/errors.hpp"

namespace slicecert {

namespace {

Int imod(Int a, Int b) { return ((a % b) + b) % b; }

FramingCandidate make_candidate(Int fA, Int fB, Int lk) {
  FramingCandidate c;
  c.fA = fA;
  c.fB = fB;
  c.lk = lk;
  c.detQ = fA * fB - lk * lk;
  c.parity_ok = imod(fA, 2) == 1 || imod(fB, 2) == 1;
  c.negative = fA < 0 || fB < 0;
  if (imod(lk - 1, 30) == 0) {
    Int res = imod((lk - 1) / 30, 4);
    c.rokhlin_vanishes = (res == 2 || res == 3);
  }
  return c;
}

}  // namespace

std::string rokhlin_str(RokhlinStatus s) {
  switch (s) {
    case RokhlinStatus::vanishes: return "vanishes";
    case RokhlinStatus::nonvanishing: return "nonvanishing";
    case RokhlinStatus::out_of_family: return "out_of_family";
  }
  return "?";
}

std::vector<FramingCandidate> framing_search(Int lk, Int bound) {
  if (bound < 1) throw InvalidInput("framing_search: bound must be positive");
  Int target = lk * lk - 1;
  std::vector<FramingCandidate> out;
  for (Int fA = -bound; fA <= bound; ++fA) {
    if (fA == 0) {
      if (target != 0) continue;
      for (Int fB = -bound; fB <= bound; ++fB) {
        auto c = make_candidate(0, fB, lk);
        if (c.parity_ok) out.push_back(c);
      }
      continue;
    }
    if (target % fA != 0) continue;
    Int fB = target / fA;
    if (fB < -bound || fB > bound) continue;
    auto c = make_candidate(fA, fB, lk);
    if (c.parity_ok) out.push_back(c);
  }
  std::sort(out.begin(), out.end(), [](const FramingCandidate& a, const FramingCandidate& b) {
    return std::pair(a.fA, a.fB) < std::pair(b.fA, b.fB);
  });
  return out;
}

std::vector<FramingCandidate> framing_search_indefinite(Int lk, Int bound) {
  if (bound < 1) throw InvalidInput("framing_search: bound must be positive");
  if (bound > 4000) throw InvalidInput("indefinite search scans the full box; bound capped at 4000");
  std::vector<FramingCandidate> out;
  for (Int fA = -bound; fA <= bound; ++fA)
    for (Int fB = -bound; fB <= bound; ++fB) {
      auto c = make_candidate(fA, fB, lk);
      if (c.detQ < 0 && c.parity_ok) out.push_back(c);
    }
  return out;
}

RokhlinStatus rokhlin_vanishes(Int lk) {
  if (imod(lk - 1, 30) != 0) return RokhlinStatus::out_of_family;
  Int ell = (lk - 1) / 30;
  Int res = imod(ell, 4);
  return (res == 2 || res == 3) ? RokhlinStatus::vanishes : RokhlinStatus::nonvanishing;
}

FamilyDescriptor build_family(Int m) {
  FamilyDescriptor d;
  d.m = m;
  d.twist_count = 30 * (4 * m + 1) - 1;
  d.lk = -d.twist_count;
  d.fA = d.lk * d.lk - 1;
  d.fB = 1;
  d.detQ = d.fA * d.fB - d.lk * d.lk;
  if (d.detQ != -1) throw InternalInconsistency("family framing must have determinant -1");
  d.rokhlin = rokhlin_vanishes(d.lk);
  if (d.rokhlin != RokhlinStatus::vanishes)
    throw InternalInconsistency("family member must have vanishing Rokhlin invariant");
  return d;
}

}  // namespace slicecert
