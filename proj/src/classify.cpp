#include "classify.hpp"

#include <algorithm>
#include <numeric>

#include "errors.hpp"

namespace specgeo {

namespace {

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) raise(Errc::bad_parameters, "group order overflows");
  return a * b;
}

std::uint64_t pow2(std::uint64_t k) {
  if (k >= 63) raise(Errc::bad_parameters, "group order overflows");
  return std::uint64_t{1} << k;
}

std::uint64_t pow3(std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < k; ++i) r = checked_mul(r, 3);
  return r;
}

// modular inverse of p mod q for gcd(p, q) = 1, extended euclid
std::uint64_t mod_inverse(std::uint64_t p, std::uint64_t q) {
  if (q == 1) return 0;
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(q), new_r = static_cast<std::int64_t>(p % q);
  while (new_r != 0) {
    const std::int64_t quot = r / new_r;
    t = std::exchange(new_t, t - quot * new_t);
    r = std::exchange(new_r, r - quot * new_r);
  }
  if (t < 0) t += static_cast<std::int64_t>(q);
  return static_cast<std::uint64_t>(t);
}

enum class Row {
  TrivialOrZ2,     // Gamma trivial or Z_2
  LensNotPm1,      // Gamma_{q;1,p}, q >= 3, p != +-1 mod q
  LensPm1,         // Gamma_{q;1,p}, q >= 3, p = +-1 mod q
  NonBinaryUpper,  // Type II-VI, not binary dihedral or binary polyhedral
  Binary,          // binary dihedral or binary polyhedral
};

Row row_of(const EllipticGroup& g) {
  if (g.type == GroupType::TypeI) {
    if (g.q <= 2) return Row::TrivialOrZ2;
    const std::uint64_t p = g.p % g.q;
    return (p == 1 || p == g.q - 1) ? Row::LensPm1 : Row::LensNotPm1;
  }
  return is_binary_dihedral_or_polyhedral(g) ? Row::Binary : Row::NonBinaryUpper;
}

}  // namespace

const char* group_type_name(GroupType t) {
  switch (t) {
    case GroupType::TypeI: return "I";
    case GroupType::TypeII: return "II";
    case GroupType::TypeIII: return "III";
    case GroupType::TypeIV: return "IV";
    case GroupType::TypeV: return "V";
    case GroupType::TypeVI: return "VI";
  }
  return "?";
}

EllipticGroup EllipticGroup::type_i(std::uint64_t q, std::uint64_t p) {
  if (q < 1) raise(Errc::bad_parameters, "Type I requires q >= 1");
  if (gcd_u64(p % std::max<std::uint64_t>(q, 1), q) != 1 && q > 1) {
    raise(Errc::bad_parameters, "Type I requires gcd(p, q) = 1");
  }
  EllipticGroup g;
  g.type = GroupType::TypeI;
  g.q = q;
  g.p = (q == 1) ? 0 : p % q;
  return g;
}

EllipticGroup EllipticGroup::type_ii(std::uint64_t n, std::uint64_t k, std::uint64_t q) {
  if (n < 3 || n % 2 == 0) raise(Errc::bad_parameters, "Type II requires n >= 3 odd");
  if (k < 3) raise(Errc::bad_parameters, "Type II requires k >= 3");
  if (gcd_u64(q, 2 * n) != 1) raise(Errc::bad_parameters, "Type II requires gcd(q, 2n) = 1");
  EllipticGroup g;
  g.type = GroupType::TypeII;
  g.n = n;
  g.k = k;
  g.q = q;
  return g;
}

EllipticGroup EllipticGroup::type_iii(std::uint64_t n, std::uint64_t q) {
  if (n < 2) raise(Errc::bad_parameters, "Type III requires n >= 2");
  if (gcd_u64(q, 2 * n) != 1) raise(Errc::bad_parameters, "Type III requires gcd(q, 2n) = 1");
  EllipticGroup g;
  g.type = GroupType::TypeIII;
  g.n = n;
  g.q = q;
  return g;
}

EllipticGroup EllipticGroup::type_iv(std::uint64_t k, std::uint64_t q) {
  if (k < 1) raise(Errc::bad_parameters, "Type IV requires k >= 1");
  if (gcd_u64(q, 6) != 1) raise(Errc::bad_parameters, "Type IV requires gcd(q, 6) = 1");
  EllipticGroup g;
  g.type = GroupType::TypeIV;
  g.k = k;
  g.q = q;
  return g;
}

EllipticGroup EllipticGroup::type_v(std::uint64_t q) {
  if (gcd_u64(q, 6) != 1) raise(Errc::bad_parameters, "Type V requires gcd(q, 6) = 1");
  EllipticGroup g;
  g.type = GroupType::TypeV;
  g.q = q;
  return g;
}

EllipticGroup EllipticGroup::type_vi(std::uint64_t q) {
  if (gcd_u64(q, 30) != 1) raise(Errc::bad_parameters, "Type VI requires gcd(q, 30) = 1");
  EllipticGroup g;
  g.type = GroupType::TypeVI;
  g.q = q;
  return g;
}

std::uint64_t group_order(const EllipticGroup& g) {
  switch (g.type) {
    case GroupType::TypeI: return g.q;
    case GroupType::TypeII: return checked_mul(checked_mul(pow2(g.k), g.n), g.q);
    case GroupType::TypeIII: return checked_mul(4 * g.n, g.q);
    case GroupType::TypeIV: return checked_mul(checked_mul(8, pow3(g.k)), g.q);
    case GroupType::TypeV: return checked_mul(48, g.q);
    case GroupType::TypeVI: return checked_mul(120, g.q);
  }
  raise(Errc::bad_parameters, "unknown group type");
}

bool is_binary_dihedral_or_polyhedral(const EllipticGroup& g) {
  switch (g.type) {
    case GroupType::TypeIII: return g.q == 1;
    case GroupType::TypeIV: return g.q == 1 && g.k == 1;
    case GroupType::TypeV:
    case GroupType::TypeVI: return g.q == 1;
    default: return false;
  }
}

bool lens_diffeomorphic(std::uint64_t q, std::uint64_t p1, std::uint64_t p2) {
  if (q < 1) raise(Errc::bad_parameters, "lens comparison requires q >= 1");
  if (gcd_u64(p1 % std::max<std::uint64_t>(q, 1), q) != 1 ||
      gcd_u64(p2 % std::max<std::uint64_t>(q, 1), q) != 1) {
    if (q > 1) raise(Errc::bad_parameters, "lens comparison requires gcd(p_i, q) = 1");
  }
  if (q <= 2) return true;
  const std::uint64_t a = p1 % q;
  const std::uint64_t b = p2 % q;
  const std::uint64_t inv = mod_inverse(a, q);
  return b == a || b == q - a || b == inv || b == (q - inv) % q;
}

std::uint64_t lens_key(std::uint64_t q, std::uint64_t p) {
  if (q < 1) raise(Errc::bad_parameters, "lens key requires q >= 1");
  if (q == 1) return 0;
  const std::uint64_t a = p % q;
  if (gcd_u64(a, q) != 1) raise(Errc::bad_parameters, "lens key requires gcd(p, q) = 1");
  const std::uint64_t inv = mod_inverse(a, q);
  return std::min({a, q - a, inv, (q - inv) % q});
}

const char* isometry_label_name(IsometryGroupDescriptor::Label l) {
  switch (l) {
    case IsometryGroupDescriptor::Label::FullO4: return "FullO4";
    case IsometryGroupDescriptor::Label::BergerPair: return "BergerPair";
    case IsometryGroupDescriptor::Label::GenericFour: return "GenericFour";
  }
  return "?";
}

const char* isometry_component_name(IsometryGroupDescriptor::Component c) {
  switch (c) {
    case IsometryGroupDescriptor::Component::SO4: return "SO4";
    case IsometryGroupDescriptor::Component::S3xS1: return "S3xS1";
    case IsometryGroupDescriptor::Component::S3xPm1: return "S3xPm1";
  }
  return "?";
}

IsometryGroupDescriptor isometry_group_descriptor(MetricClass m) {
  using L = IsometryGroupDescriptor::Label;
  using C = IsometryGroupDescriptor::Component;
  switch (m) {
    case MetricClass::ConstantCurvature: return {L::FullO4, C::SO4};
    case MetricClass::BergerNonConstant: return {L::BergerPair, C::S3xS1};
    case MetricClass::Generic: return {L::GenericFour, C::S3xPm1};
  }
  return {};
}

QuotientStructure quotient_structure(const EllipticGroup& g, MetricClass m) {
  group_order(g);  // parameter sanity, raises BadParameters on bad records
  const Row row = row_of(g);

  const auto cell = [](int count, std::initializer_list<bool> flags, const char* centralizer,
                       const char* notes) {
    QuotientStructure out;
    out.class_count = count;
    out.homogeneous_flags.assign(flags.begin(), flags.end());
    out.centralizer_descriptor = centralizer;
    out.notes = notes;
    return out;
  };

  switch (row) {
    case Row::TrivialOrZ2:
      switch (m) {
        case MetricClass::ConstantCurvature:
          return cell(1, {true}, "S3xS3", "round metric on S^3 or SO(3)");
        case MetricClass::BergerNonConstant:
          return cell(1, {true}, "S3xS1", "every left-invariant class descends; homogeneous");
        case MetricClass::Generic:
          return cell(1, {true}, "S3x1", "every left-invariant class descends; homogeneous");
      }
      break;
    case Row::LensNotPm1:
      switch (m) {
        case MetricClass::ConstantCurvature:
          return cell(1, {false}, "S1xS1", "constant-curvature lens space, p != +-1");
        case MetricClass::BergerNonConstant:
          return cell(2, {false, false}, "S1xS1|S1xS1",
                      "the classes covered by Gamma_{q;1,-p} and Gamma_{q;1,p}");
        case MetricClass::Generic:
          return cell(0, {}, "None", "no generic left-invariant metric descends");
      }
      break;
    case Row::LensPm1:
      switch (m) {
        case MetricClass::ConstantCurvature:
          return cell(1, {true}, "S3xS1", "homogeneous constant-curvature lens space");
        case MetricClass::BergerNonConstant:
          return cell(2, {true, false}, "S3xS1|S1xS1",
                      "index 0 is the Gamma_{q;1,-1}-conjugate (homogeneous) class");
        case MetricClass::Generic:
          return cell(1, {false}, "S1x1", "covered by the Gamma_{q;1,1}-conjugate");
      }
      break;
    case Row::NonBinaryUpper:
      switch (m) {
        case MetricClass::ConstantCurvature:
          return cell(1, {false}, "1xS1", "non-binary Type II-VI quotient");
        case MetricClass::BergerNonConstant:
          return cell(1, {false}, "1xS1", "non-binary Type II-VI quotient");
        case MetricClass::Generic:
          return cell(0, {}, "None", "no generic left-invariant metric descends");
      }
      break;
    case Row::Binary:
      switch (m) {
        case MetricClass::ConstantCurvature:
          return cell(1, {false}, "1xS3", "binary dihedral/polyhedral quotient");
        case MetricClass::BergerNonConstant:
          return cell(1, {false}, "1xS1", "binary dihedral/polyhedral quotient");
        case MetricClass::Generic:
          return cell(1, {false}, "1x1", "binary dihedral/polyhedral quotient");
      }
      break;
  }
  raise(Errc::bad_parameters, "unreachable classification cell");
}

}  // namespace specgeo
