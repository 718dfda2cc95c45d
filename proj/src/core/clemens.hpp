#ifndef HCENSUS_CLEMENS_HPP
#define HCENSUS_CLEMENS_HPP

#include "numeric.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace hc {

// Boundary data of a compactified orbit: components carry the gauge-form
// pole order d and the height multiplicity lambda; faces record which
// components meet.  Faces are kept downward-closed and always contain the
// singletons.
struct DivisorComponent {
    std::string name;
    long d = 0;
    Rat lambda = 0;
};

class DivisorModel {
public:
    DivisorModel(std::vector<DivisorComponent> components,
                 std::vector<std::set<int>> maximal_faces,
                 std::set<int> b_set);

    const std::vector<DivisorComponent>& components() const { return components_; }
    const std::set<std::set<int>>& faces() const { return faces_; }
    const std::set<int>& b_set() const { return b_set_; }

    static DivisorModel from_json(const std::string& text);
    static DivisorModel from_json_file(const std::string& path);
    std::string to_json() const;

private:
    std::vector<DivisorComponent> components_;
    std::set<std::set<int>> faces_; // downward-closed, singletons included
    std::set<int> b_set_;
};

enum class Focusing { yes, no, not_applicable };

struct GrowthPrediction {
    Rat a;                    // growth exponent, max (d-1)/lambda
    int b = 1;                // largest face inside the attaining set
    std::set<int> attaining;  // components realizing the maximum
    Focusing focusing = Focusing::not_applicable;
    std::string law;          // rendered "c*R^a*(log R)^(b-1)" form
    std::vector<std::string> notes;
};

GrowthPrediction predict(const DivisorModel& model);

// The three hardcoded boundary models.
DivisorModel preset_ex1();
DivisorModel preset_ex2(unsigned n, unsigned lambda1, unsigned lambda2);
DivisorModel preset_ex3(unsigned kappa1, unsigned kappa2);

// Example III boundary shape with a caller-chosen multiplicity vector,
// used to study when the limit measure escapes the distinguished locus.
DivisorModel ex3_shape_with_lambdas(const std::array<Rat, 5>& lambdas);

// The (d-1)/lambda ratio vector in component order (entries with lambda = 0
// reported as nullopt).
std::vector<std::optional<Rat>> ratio_vector(const DivisorModel& model);

std::string prediction_to_json(const GrowthPrediction& p);

} // namespace hc

#endif
