#pragma once

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "qbench/errors.hpp"

namespace qbench {

// M x M grayscale image, row-major. Pixel (r, c) maps to basis index r*M + c.
struct ImageSpec {
    int M = 0;
    std::vector<double> pixels;
    std::string source;

    int num_qubits() const {
        int q = 0;
        while ((1 << q) < M) ++q;
        return 2 * q;
    }

    void validate() const {
        require(M >= 4 && M <= 64 && (M & (M - 1)) == 0, "image side must be a power of two in 4..64");
        require(pixels.size() == static_cast<std::size_t>(M) * static_cast<std::size_t>(M),
                "pixel count must be M*M");
        double s = 0.0;
        for (double p : pixels) {
            require(std::isfinite(p) && p >= 0.0, "pixels must be finite and non-negative");
            s += p * p;
        }
        require<DegenerateInput>(s > 0.0, "image is entirely black");
    }

    // Unit-norm copy: sum of squares = 1.
    std::vector<double> normalized() const {
        validate();
        double s = 0.0;
        for (double p : pixels) s += p * p;
        const double inv = 1.0 / std::sqrt(s);
        std::vector<double> out(pixels.size());
        for (std::size_t i = 0; i < pixels.size(); ++i) out[i] = pixels[i] * inv;
        return out;
    }
};

inline ImageSpec constant_image(int M, double value = 1.0) {
    ImageSpec img{M, std::vector<double>(static_cast<std::size_t>(M) * static_cast<std::size_t>(M), value), "constant"};
    img.validate();
    return img;
}

// Netpbm graymap, ASCII (P2) or binary (P5, 8-bit).
inline ImageSpec load_pgm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    auto next_token = [&]() {
        std::string tok;
        char ch;
        while (in.get(ch)) {
            if (ch == '#') {
                std::string skip;
                std::getline(in, skip);
                continue;
            }
            if (std::isspace(static_cast<unsigned char>(ch))) {
                if (!tok.empty()) break;
                continue;
            }
            tok.push_back(ch);
        }
        if (tok.empty()) throw SchemaError("truncated PGM header in " + path);
        return tok;
    };
    const std::string magic = next_token();
    require<SchemaError>(magic == "P2" || magic == "P5", path + " is not a PGM file");
    const int w = std::stoi(next_token());
    const int h = std::stoi(next_token());
    const int maxval = std::stoi(next_token());
    require<SchemaError>(w == h, "image must be square");
    require<SchemaError>(maxval > 0 && maxval < 256, "only 8-bit PGM is supported");
    ImageSpec img;
    img.M = w;
    img.source = path;
    img.pixels.resize(static_cast<std::size_t>(w) * static_cast<std::size_t>(h));
    for (auto& p : img.pixels) {
        if (magic == "P2") {
            p = std::stod(next_token());
        } else {
            char ch;
            if (!in.get(ch)) throw SchemaError("truncated PGM data in " + path);
            p = static_cast<unsigned char>(ch);
        }
    }
    img.validate();
    return img;
}

} // namespace qbench
