#pragma once

#include <cmath>
#include <string>
#include <vector>

namespace ohc {

// The constant hierarchy made explicit. Values are configuration, not
// truth: the asymptotic separations cannot hold at desk scale, so the
// monotone-chain check records violations instead of rejecting.
struct ConstantsProfile {
    double nu = 0.02;
    double tau = 0.25;
    double eps = 0.005;
    double eps1 = 0.01;
    double eps2 = 0.02;
    double eps3 = 0.08;
    double eps4 = 0.12;
    double eta1 = 0.05;
    double eta2 = 0.2;

    // eps <= eps1 <= eps2 <= eta1 <= tau <= eps3 <= eps4 <= eta2
    std::vector<std::string> chain_violations() const;
    void validate() const;  // throws on values outside (0,1) or nu > tau

    std::string to_text() const;
    static ConstantsProfile from_text(const std::string& text);
    static ConstantsProfile load(const std::string& path);

    static ConstantsProfile desk() { return ConstantsProfile{}; }
    // Scaled for the cover constructions, whose windows are profile-driven;
    // the desk values make those bounds vacuous at reachable n.
    static ConstantsProfile cover_scale();
};

// Threshold convention: every ">= frac*n" comparison in the paper is
// resolved as count >= ceil(frac*n), with a tiny slack so that exact
// products such as 0.2*10 do not round up through float noise.
inline int threshold_count(double frac, int n) {
    double x = frac * n;
    int t = int(std::ceil(x - 1e-9));
    return t < 0 ? 0 : t;
}

}  // namespace ohc
