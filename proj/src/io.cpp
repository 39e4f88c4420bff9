#include "ballkit/io.hpp"

#include <bit>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <vector>

#include "ballkit/calculus.hpp"
#include "ballkit/resolution.hpp"
#include "ballkit/transforms.hpp"

namespace ballkit {

namespace {

void put_u32(std::string& buf, std::uint32_t v) {
    for (int s = 0; s < 32; s += 8) buf.push_back(static_cast<char>((v >> s) & 0xff));
}

void put_f64(std::string& buf, double d) {
    const std::uint64_t v = std::bit_cast<std::uint64_t>(d);
    for (int s = 0; s < 64; s += 8) buf.push_back(static_cast<char>((v >> s) & 0xff));
}

std::uint32_t get_u32(const unsigned char* q) {
    return static_cast<std::uint32_t>(q[0]) | (static_cast<std::uint32_t>(q[1]) << 8) |
           (static_cast<std::uint32_t>(q[2]) << 16) |
           (static_cast<std::uint32_t>(q[3]) << 24);
}

double get_f64(const unsigned char* q) {
    std::uint64_t v = 0;
    for (int b = 7; b >= 0; --b) v = (v << 8) | q[b];
    return std::bit_cast<double>(v);
}

} // namespace

void save(const BallScalar& f, const std::string& path) {
    const CffTensor& A = f.coeffs();
    std::string buf;
    buf.reserve(17 + 16 * A.size());
    buf += "BFN1";
    put_u32(buf, static_cast<std::uint32_t>(A.m()));
    put_u32(buf, static_cast<std::uint32_t>(A.n()));
    put_u32(buf, static_cast<std::uint32_t>(A.p()));
    buf.push_back(1);
    for (const Complex& z : A.data()) {
        put_f64(buf, z.real());
        put_f64(buf, z.imag());
    }

    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
    if (!out) throw FormatError("save: cannot write '" + path + "'");
}

BallScalar load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("load: cannot open '" + path + "'");
    std::vector<unsigned char> raw((std::istreambuf_iterator<char>(in)),
                                   std::istreambuf_iterator<char>());

    if (raw.size() < 17) throw FormatError("load: truncated header in '" + path + "'");
    if (raw[0] != 'B' || raw[1] != 'F' || raw[2] != 'N' || raw[3] != '1')
        throw FormatError("load: bad magic in '" + path + "'");
    const std::uint32_t m = get_u32(raw.data() + 4);
    const std::uint32_t n = get_u32(raw.data() + 8);
    const std::uint32_t p = get_u32(raw.data() + 12);
    if (raw[16] != 1)
        throw FormatError("load: unsupported coordinate convention in '" + path + "'");
    if (m < 1 || n < 2 || p < 2 || (n % 2) || (p % 2))
        throw FormatError("load: invalid sizes " + std::to_string(m) + " x " +
                          std::to_string(n) + " x " + std::to_string(p));

    const std::uint64_t limit = std::uint64_t(1) << 31;
    const std::uint64_t count = std::uint64_t(m) * n * p;
    if (m > limit || count / m / n != p || count > limit)
        throw FormatError("load: size overflow in '" + path + "'");
    const std::uint64_t want = 17 + 16 * count;
    if (raw.size() != want)
        throw FormatError("load: file length " + std::to_string(raw.size()) +
                          " does not match sizes (expected " + std::to_string(want) + ")");

    CffTensor A(static_cast<int>(m), static_cast<int>(n), static_cast<int>(p));
    const unsigned char* q = raw.data() + 17;
    for (std::size_t t = 0; t < A.size(); ++t, q += 16)
        A.data()[t] = Complex(get_f64(q), get_f64(q + 8));

    const double vscale = coeffs2vals(A).max_abs();
    return BallScalar(std::move(A), true, vscale);
}

void emit_slice(const BallScalar& f, const std::string& plane, int res, std::ostream& out) {
    if (res < 2) throw DomainError("slice: resolution must be at least 2");

    std::string spec;
    for (char c : plane)
        if (!std::isspace(static_cast<unsigned char>(c))) spec += c;
    if (spec.size() < 3 || spec[1] != '=')
        throw DomainError("slice: invalid plane spec '" + plane + "'");
    const char axis = spec[0];
    char* end = nullptr;
    const double c = std::strtod(spec.c_str() + 2, &end);
    if (end != spec.c_str() + spec.size())
        throw DomainError("slice: invalid plane spec '" + plane + "'");

    char row[128];
    const double pi = std::acos(-1.0);

    if (axis == 'r') {
        if (c != 1.0) throw DomainError("slice: only the r=1 sphere is supported");
        out << "lambda,theta,value\n";
        for (int a = 0; a < res; ++a) {
            const double lam = -pi + 2.0 * pi * a / (res - 1);
            for (int b = 0; b < res; ++b) {
                const double th = pi * b / (res - 1);
                const double v = eval_point_sph(f, 1.0, lam, th).real();
                std::snprintf(row, sizeof(row), "%.15g,%.15g,%.15g\n", lam, th, v);
                out << row;
            }
        }
        return;
    }

    int fixed;
    if (axis == 'x') fixed = 0;
    else if (axis == 'y') fixed = 1;
    else if (axis == 'z') fixed = 2;
    else throw DomainError("slice: invalid plane spec '" + plane + "'");
    if (std::abs(c) > 1.0) throw DomainError("slice: plane does not intersect the ball");

    static const char* names[3] = {"x", "y", "z"};
    const int c1 = fixed == 0 ? 1 : 0;
    const int c2 = fixed == 2 ? 1 : 2;
    out << names[c1] << ',' << names[c2] << ",value\n";
    for (int a = 0; a < res; ++a) {
        const double u = -1.0 + 2.0 * a / (res - 1);
        for (int b = 0; b < res; ++b) {
            const double w = -1.0 + 2.0 * b / (res - 1);
            if (u * u + w * w + c * c > 1.0 + 1e-12) continue;
            double q[3];
            q[fixed] = c;
            q[c1] = u;
            q[c2] = w;
            const double v = eval_point(f, q[0], q[1], q[2]).real();
            std::snprintf(row, sizeof(row), "%.15g,%.15g,%.15g\n", u, w, v);
            out << row;
        }
    }
}

} // namespace ballkit
