#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace pangular {

// Finite-dimensional real vector. Coordinates are validated on construction:
// the dimension is positive and every entry is finite.
class Vec {
public:
    explicit Vec(std::vector<double> coords);
    Vec(std::initializer_list<double> coords);

    int dim() const { return static_cast<int>(coords_.size()); }
    double operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }
    std::span<const double> coords() const { return coords_; }

    bool is_zero() const;

private:
    std::vector<double> coords_;
};

Vec operator+(const Vec& u, const Vec& v);
Vec operator-(const Vec& u, const Vec& v);
Vec operator*(double t, const Vec& v);

bool operator==(const Vec& u, const Vec& v);

// "(c1, c2, ..., cn)" with shortest round-trip digits; diagnostics only.
std::string to_string(const Vec& v);

}  // namespace pangular
