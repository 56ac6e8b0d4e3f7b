#include "pangular/vec.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace pangular {

namespace {

void check_same_dim(const Vec& u, const Vec& v, const char* op) {
    if (u.dim() != v.dim()) {
        throw std::invalid_argument(std::string("Vec: dimension mismatch in ") + op + " (" +
                                    std::to_string(u.dim()) + " vs " + std::to_string(v.dim()) +
                                    ")");
    }
}

}  // namespace

Vec::Vec(std::vector<double> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) {
        throw std::invalid_argument("Vec: dimension must be positive");
    }
    for (double c : coords_) {
        if (!std::isfinite(c)) {
            throw std::invalid_argument("Vec: non-finite coordinate");
        }
    }
}

Vec::Vec(std::initializer_list<double> coords) : Vec(std::vector<double>(coords)) {}

bool Vec::is_zero() const {
    for (double c : coords_) {
        if (c != 0.0) return false;
    }
    return true;
}

Vec operator+(const Vec& u, const Vec& v) {
    check_same_dim(u, v, "operator+");
    std::vector<double> out(static_cast<std::size_t>(u.dim()));
    for (int i = 0; i < u.dim(); ++i) out[static_cast<std::size_t>(i)] = u[i] + v[i];
    return Vec(std::move(out));
}

Vec operator-(const Vec& u, const Vec& v) {
    check_same_dim(u, v, "operator-");
    std::vector<double> out(static_cast<std::size_t>(u.dim()));
    for (int i = 0; i < u.dim(); ++i) out[static_cast<std::size_t>(i)] = u[i] - v[i];
    return Vec(std::move(out));
}

Vec operator*(double t, const Vec& v) {
    std::vector<double> out(static_cast<std::size_t>(v.dim()));
    for (int i = 0; i < v.dim(); ++i) out[static_cast<std::size_t>(i)] = t * v[i];
    return Vec(std::move(out));
}

bool operator==(const Vec& u, const Vec& v) {
    if (u.dim() != v.dim()) return false;
    for (int i = 0; i < u.dim(); ++i) {
        if (u[i] != v[i]) return false;
    }
    return true;
}

std::string to_string(const Vec& v) {
    std::string out = "(";
    char buf[32];
    for (int i = 0; i < v.dim(); ++i) {
        std::snprintf(buf, sizeof buf, "%g", v[i]);
        if (i > 0) out += ", ";
        out += buf;
    }
    out += ")";
    return out;
}

}  // namespace pangular
