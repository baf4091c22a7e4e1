#pragma once

#include <numbers>
#include <stdexcept>

namespace gvl {

// Periodic collocation grid on [0, L): n points, mode numbers stored in
// transform order k = 0, 1, ..., n/2-1, -n/2, ..., -1 with physical
// wavenumber xi_k = 2*pi*k / L. Mode -n/2 has no positive partner.
struct GridSpec {
    int n = 0;
    double length = 0.0;

    static GridSpec make(int n, double length) {
        if (n < 8 || (n & (n - 1)) != 0)
            throw std::invalid_argument(
                "grid: n must be a power of two and at least 8");
        if (!(length > 0.0))
            throw std::invalid_argument("grid: length must be positive");
        return GridSpec{n, length};
    }

    int mode_of_index(int i) const { return i < n / 2 ? i : i - n; }
    int index_of_mode(int k) const { return k >= 0 ? k : k + n; }

    double xi_of_mode(int k) const {
        return 2.0 * std::numbers::pi * k / length;
    }
    double xi_of_index(int i) const { return xi_of_mode(mode_of_index(i)); }
    // Largest wavenumber magnitude on the grid (the unpaired mode -n/2).
    double xi_max() const { return 2.0 * std::numbers::pi * (n / 2) / length; }

    double dx() const { return length / n; }
    double x(int j) const { return j * dx(); }

    bool operator==(const GridSpec&) const = default;
};

}  // namespace gvl
