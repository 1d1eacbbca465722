#include "carlab/crf.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "carlab/error.hpp"

namespace carlab {

namespace {

constexpr std::array<char, 8> kMagic = {'C', 'R', 'F', 'I', 'E', 'L', 'D', '1'};

template <class T>
void put_le(std::ostream& os, T value) {
    std::array<unsigned char, sizeof(T)> bytes;
    std::memcpy(bytes.data(), &value, sizeof(T));
    if constexpr (std::endian::native == std::endian::big) std::reverse(bytes.begin(), bytes.end());
    os.write(reinterpret_cast<const char*>(bytes.data()), sizeof(T));
}

template <class T>
T get_le(std::istream& is) {
    std::array<unsigned char, sizeof(T)> bytes;
    if (!is.read(reinterpret_cast<char*>(bytes.data()), sizeof(T))) {
        throw Error("CRF1: truncated input");
    }
    if constexpr (std::endian::native == std::endian::big) std::reverse(bytes.begin(), bytes.end());
    T value;
    std::memcpy(&value, bytes.data(), sizeof(T));
    return value;
}

}  // namespace

void write_crf(std::ostream& os, const Field& field) {
    os.write(kMagic.data(), kMagic.size());
    put_le<std::uint32_t>(os, static_cast<std::uint32_t>(field.grid().n()));
    put_le<double>(os, field.grid().half_width());
    put_le<std::uint8_t>(os, static_cast<std::uint8_t>(field.space()));
    for (const cplx& v : field.values()) {
        put_le<double>(os, v.real());
        put_le<double>(os, v.imag());
    }
    if (!os) throw Error("CRF1: write failed");
}

Field read_crf(std::istream& is) {
    std::array<char, 8> magic{};
    if (!is.read(magic.data(), magic.size()) || magic != kMagic) {
        throw Error("CRF1: bad magic");
    }
    const auto n = get_le<std::uint32_t>(is);
    const auto half_width = get_le<double>(is);
    const auto tag = get_le<std::uint8_t>(is);
    if (tag > 1) throw Error("CRF1: unknown space tag");
    GridSpec grid = make_grid(static_cast<int>(n), half_width);
    std::vector<cplx> values(grid.size());
    for (cplx& v : values) {
        const double re = get_le<double>(is);
        const double im = get_le<double>(is);
        v = {re, im};
    }
    if (is.peek() != std::char_traits<char>::eof()) {
        throw Error("CRF1: trailing bytes after the declared n*n samples");
    }
    return Field(grid, std::move(values), static_cast<Space>(tag));
}

void save_crf(const std::filesystem::path& path, const Field& field) {
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw Error("cannot open " + tmp.string() + " for writing");
        write_crf(os, field);
    }
    std::filesystem::rename(tmp, path);
}

Field load_crf(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw Error("cannot open " + path.string());
    return read_crf(is);
}

}  // namespace carlab
