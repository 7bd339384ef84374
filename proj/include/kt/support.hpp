#pragma once

// Support of modules and complexes in V(f̃).

#include <vector>

#include "kt/homology.hpp"

namespace kt {

struct SupportReport {
    PowerStatus verdict = PowerStatus::yes;
    std::vector<PowerAnnihilation> per_element;
    int failing_degree = 0; // for complexes: homological degree that decided a negative verdict
};

/// Each f_i has a power killing Q.
inline SupportReport support_status(const GradedPolyRing& R, const PresentedModule& Q, const std::vector<Polynomial>& f, int cap = 32)
{
    SupportReport rep;
    for (const auto& s : f) {
        auto st = power_annihilation(R, s, Q, cap);
        rep.per_element.push_back(st);
        if (st.status == PowerStatus::no) rep.verdict = PowerStatus::no;
        else if (st.status == PowerStatus::cap_exhausted && rep.verdict == PowerStatus::yes) rep.verdict = PowerStatus::cap_exhausted;
    }
    return rep;
}

inline bool support_in(const GradedPolyRing& R, const PresentedModule& Q, const std::vector<Polynomial>& f, int cap = 32)
{
    auto rep = support_status(R, Q, f, cap);
    if (rep.verdict == PowerStatus::cap_exhausted) throw SearchCapExhausted("support", "no decision within " + std::to_string(cap) + " colon steps");
    return rep.verdict == PowerStatus::yes;
}

inline SupportReport complex_support_status(const GradedPolyRing& R, const FreeComplex& X, const std::vector<Polynomial>& f, int cap = 32)
{
    SupportReport rep;
    if (X.empty()) return rep;
    for (int n = X.lo(); n <= X.hi(); ++n) {
        auto st = support_status(R, homology_presentation(R, X, n), f, cap);
        rep.per_element.insert(rep.per_element.end(), st.per_element.begin(), st.per_element.end());
        if (st.verdict == PowerStatus::no) {
            rep.verdict = PowerStatus::no;
            rep.failing_degree = n;
            return rep;
        }
        if (st.verdict == PowerStatus::cap_exhausted) {
            rep.verdict = PowerStatus::cap_exhausted;
            rep.failing_degree = n;
        }
    }
    return rep;
}

inline bool complex_supported_in(const GradedPolyRing& R, const FreeComplex& X, const std::vector<Polynomial>& f, int cap = 32)
{
    auto rep = complex_support_status(R, X, f, cap);
    if (rep.verdict == PowerStatus::cap_exhausted)
        throw SearchCapExhausted("support", "no decision for homology in degree " + std::to_string(rep.failing_degree));
    return rep.verdict == PowerStatus::yes;
}

} // namespace kt
