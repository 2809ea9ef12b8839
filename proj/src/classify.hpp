#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "metric.hpp"

namespace specgeo {

/// The six families of finite subgroups of SO(4) acting freely on S^3.
/// Groups are parameter records; every classification question below is
/// decided from the parameters via the normal forms, never from matrices.
enum class GroupType { TypeI = 1, TypeII, TypeIII, TypeIV, TypeV, TypeVI };

const char* group_type_name(GroupType t);

struct EllipticGroup {
  GroupType type = GroupType::TypeI;
  std::uint64_t q = 1;  ///< cyclic parameter (all types); rotation order for Type I
  std::uint64_t p = 0;  ///< Type I second rotation parameter, stored reduced mod q
  std::uint64_t n = 0;  ///< Type II/III dihedral parameter
  std::uint64_t k = 0;  ///< Type II/IV power parameter

  /// Cyclic Gamma_{q;1,p}: q >= 1, gcd(p, q) = 1.
  static EllipticGroup type_i(std::uint64_t q, std::uint64_t p);
  /// D'_{2^k n} x C_q: n >= 3 odd, k >= 3, gcd(q, 2n) = 1.
  static EllipticGroup type_ii(std::uint64_t n, std::uint64_t k, std::uint64_t q);
  /// D*_n x C_q: n >= 2, gcd(q, 2n) = 1.
  static EllipticGroup type_iii(std::uint64_t n, std::uint64_t q);
  /// T'_{3^k 8} x C_q: k >= 1, gcd(q, 6) = 1.
  static EllipticGroup type_iv(std::uint64_t k, std::uint64_t q);
  /// O* x C_q: gcd(q, 6) = 1.
  static EllipticGroup type_v(std::uint64_t q);
  /// I* x C_q: gcd(q, 30) = 1.
  static EllipticGroup type_vi(std::uint64_t q);
};

std::uint64_t group_order(const EllipticGroup& g);

/// Binary dihedral (Type III, q=1) or binary polyhedral (Type V/VI with q=1,
/// Type IV with k=q=1).
bool is_binary_dihedral_or_polyhedral(const EllipticGroup& g);

/// Whether L(q;1,p1) and L(q;1,p2) are diffeomorphic:
/// p2 = +-p1 or +-p1^{-1} mod q.
bool lens_diffeomorphic(std::uint64_t q, std::uint64_t p1, std::uint64_t p2);

/// Orientation-insensitive diffeomorphism key min{p, q-p, p^{-1}, q-p^{-1}} mod q.
std::uint64_t lens_key(std::uint64_t q, std::uint64_t p);

/// Symbolic shape of Isom(S^3, g), keyed only by the metric class.
struct IsometryGroupDescriptor {
  enum class Label { FullO4, BergerPair, GenericFour };
  enum class Component { SO4, S3xS1, S3xPm1 };
  Label label = Label::FullO4;
  Component component = Component::SO4;
};

const char* isometry_label_name(IsometryGroupDescriptor::Label l);
const char* isometry_component_name(IsometryGroupDescriptor::Component c);

IsometryGroupDescriptor isometry_group_descriptor(MetricClass m);

/// One cell of the classification table: how many isometry classes of
/// locally homogeneous metrics on Gamma\S^3 a left-invariant metric of the
/// given class covers, and which of them are homogeneous.  When two classes
/// are covered, index 0 is the class whose covering group is the
/// Gamma_{q;1,-1}-conjugate, which is the homogeneous one when p = +-1 mod q.
struct QuotientStructure {
  int class_count = 0;
  std::vector<bool> homogeneous_flags;
  std::string centralizer_descriptor;  ///< identity component(s) of the centralizer, per class
  std::string notes;
};

QuotientStructure quotient_structure(const EllipticGroup& g, MetricClass m);

}  // namespace specgeo
