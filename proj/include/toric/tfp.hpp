#pragma once

// Toric fiber products of multigraded point configurations and their
// blending functions.

#include "toric/blending.hpp"
#include "toric/linalg.hpp"

#include <cstdint>
#include <vector>

namespace toric {

/// A configuration whose points are partitioned into degree classes.
/// Class i holds the points with assignment == i, in configuration order;
/// the j-th of them is b^i_j.
struct GradedConfiguration {
    PointConfiguration config;
    std::vector<std::size_t> assignment; // degree class per point, 0-based

    GradedConfiguration() = default;
    GradedConfiguration(PointConfiguration config, std::vector<std::size_t> assignment);

    /// Point indices of each class 0..num_classes-1.
    std::vector<std::vector<std::size_t>> classes(std::size_t num_classes) const;
};

/// Affine map x -> M [x; 1]; `matrix` has dim+1 columns, the last one constant.
struct AffineMap {
    linalg::Matrix matrix;

    RationalVector apply(const Point& p) const;
    std::string to_string(const std::vector<std::string>& variables) const;
};

/// Certified multigrading: independent degrees, the omega certificate and
/// affine degree maps for both factors.
struct Multigrading {
    PointConfiguration degrees; // a^1..a^r as points
    RationalVector omega;
    std::vector<std::size_t> assignmentB;
    std::vector<std::size_t> assignmentC;
    AffineMap degree_map_B;
    AffineMap degree_map_C;

    std::size_t size() const { return degrees.size(); }
    std::vector<std::vector<std::size_t>> classesB() const;
    std::vector<std::vector<std::size_t>> classesC() const;
};

/// Throws DependentDegrees, NoOmega, EmptyDegreeClass or NoDegreeMap.
Multigrading validate_multigrading(const GradedConfiguration& B, const GradedConfiguration& C,
                                   const PointConfiguration& A);

/// Position of TFP point (i, j, k) in both factors (all 0-based).
struct TfpIndex {
    std::size_t i = 0, j = 0, k = 0;
    std::size_t b = 0; // point index in B
    std::size_t c = 0; // point index in C
};

struct TfpConfiguration {
    PointConfiguration points; // labels "z[i][j][k]", 1-based
    WeightVector weights;
    std::vector<TfpIndex> index;
};

/// Points (b^i_j, c^i_k) ordered by (i, j, k); weights multiply.
TfpConfiguration tfp_configuration(const GradedConfiguration& B, const WeightVector& wB,
                                   const GradedConfiguration& C, const WeightVector& wC, const Multigrading& g);

enum class DenominatorForm { B, C };

/// beta^i_j(x) beta^i_k(y) / N^i where N^i is the class-i sum of the B
/// functions (DenominatorForm::B) or of the C functions (DenominatorForm::C).
/// Factor variables are renamed x1..x_d1 and y1..y_d2. With check_factors,
/// factors failing a precision condition are recorded in `warnings`.
BlendingSystem tfp_blending(const BlendingSystem& sysB, const BlendingSystem& sysC, const Multigrading& g,
                            DenominatorForm form = DenominatorForm::B, bool check_factors = true);

/// TFP configuration matching tfp_blending's output order.
TfpConfiguration tfp_configuration(const BlendingSystem& sysB, const BlendingSystem& sysC, const Multigrading& g);

/// Sum of the functions of degree class i.
RationalFunction class_sum(const BlendingSystem& sys, const std::vector<std::size_t>& assignment, std::size_t i);

struct FaceCertificate {
    PointConfiguration points;               // the class points b^i_j
    std::vector<std::size_t> point_indices;  // their indices in the configuration
    std::vector<std::size_t> facets;         // facet indices whose intersection cuts them out
};

/// Face conv(B^i) of poly with a facet certificate. Throws NotAFace.
FaceCertificate graded_face(const GradedConfiguration& B, const LatticePolytope& poly, std::size_t i);

/// The class-i functions sum to exactly 1 at sampled points of relint conv(B^i).
Check verify_face_partition(const BlendingSystem& sys, const GradedConfiguration& B, const LatticePolytope& poly,
                            std::size_t i, std::size_t samples = 20, std::uint64_t seed = 0);

/// Both denominator forms agree exactly at sampled points of relint of the
/// fiber product's convex hull.
Check verify_form_agreement(const BlendingSystem& sysB, const BlendingSystem& sysC, const Multigrading& g,
                            std::size_t samples = 50, std::uint64_t seed = 0);

} // namespace toric
