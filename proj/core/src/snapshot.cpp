#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>

#include "shearbq/errors.hpp"
#include "shearbq/solver.hpp"

static_assert(std::endian::native == std::endian::little,
              "snapshot files are defined little-endian");

namespace shearbq {

namespace {

constexpr char kMagic[8] = {'S', 'B', 'Q', 'S', 'N', 'A', 'P', '1'};

template <class T>
void put(std::ofstream& os, const T& v) {
    os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <class T>
void get(std::ifstream& is, T& v) {
    is.read(reinterpret_cast<char*>(&v), sizeof(T));
}

void put_field(std::ofstream& os, const SpectralField& f) {
    os.write(reinterpret_cast<const char*>(f.data()),
             std::streamsize(f.size() * sizeof(Complex)));
}

}  // namespace

void write_snapshot(const std::string& path, const SimState& s,
                    const Params& p) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw IoError("cannot open snapshot for writing: " + path);
    os.write(kMagic, sizeof(kMagic));
    put<std::uint32_t>(os, std::uint32_t(s.omega.nx()));
    put<std::uint32_t>(os, std::uint32_t(s.omega.ny()));
    put<double>(os, s.omega.delta_xi());
    put<double>(os, s.t);
    put<double>(os, p.alpha);
    put<double>(os, p.beta);
    put<double>(os, p.nu_x);
    put<double>(os, p.nu_y);
    put<double>(os, p.eta_x);
    put<double>(os, p.eta_y);
    put<std::int32_t>(os, std::int32_t(p.sobolev_n));
    put_field(os, s.omega);
    put_field(os, s.theta);
    if (!os) throw IoError("short write on snapshot: " + path);
}

SimState read_snapshot(const std::string& path, Params* params_out) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw IoError("cannot open snapshot: " + path);
    char magic[8];
    is.read(magic, 8);
    if (!is || std::memcmp(magic, kMagic, 8) != 0)
        throw IoError("bad snapshot magic in " + path);
    std::uint32_t nx = 0, ny = 0;
    double dxi = 0.0, t = 0.0;
    get(is, nx);
    get(is, ny);
    get(is, dxi);
    get(is, t);
    Params p;
    get(is, p.alpha);
    get(is, p.beta);
    get(is, p.nu_x);
    get(is, p.nu_y);
    get(is, p.eta_x);
    get(is, p.eta_y);
    std::int32_t n = 0;
    get(is, n);
    p.sobolev_n = int(n);

    SimState s;
    s.t = t;
    s.omega = SpectralField(int(nx), int(ny), dxi, t);
    s.theta = SpectralField(int(nx), int(ny), dxi, t);
    is.read(reinterpret_cast<char*>(s.omega.data()),
            std::streamsize(s.omega.size() * sizeof(Complex)));
    is.read(reinterpret_cast<char*>(s.theta.data()),
            std::streamsize(s.theta.size() * sizeof(Complex)));
    if (!is) throw IoError("truncated snapshot: " + path);
    if (params_out) *params_out = p;
    return s;
}

}  // namespace shearbq
