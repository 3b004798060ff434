#include "sq/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace sq {

std::string serialize_modules(const Quiver& drawn, const std::vector<Representation>& mods) {
    Quiver rq = reversed(drawn);
    std::ostringstream out;
    for (const auto& m : mods) {
        if (!(m.quiver == rq)) throw std::invalid_argument("serialize_modules: module is not over the reversed quiver");
        out << "module\n";
        out << "dims";
        for (int d : m.dims) out << ' ' << d;
        out << "\n";
        for (size_t a = 0; a < m.maps.size(); ++a) {
            const RatMatrix& mat = m.maps[a];
            out << "map " << a << ' ' << mat.rows() << ' ' << mat.cols() << "\n";
            for (int r = 0; r < mat.rows(); ++r) {
                for (int c = 0; c < mat.cols(); ++c) {
                    if (c) out << ' ';
                    out << rat_str(mat.at(r, c));
                }
                out << "\n";
            }
        }
    }
    return out.str();
}

std::vector<Representation> parse_modules(const Quiver& drawn, const std::string& text) {
    Quiver rq = reversed(drawn);
    std::vector<Representation> mods;
    std::istringstream in(text);
    std::string line;
    Representation cur;
    bool open = false;
    size_t next_map = 0;
    auto close = [&] {
        if (!open) return;
        if (next_map != rq.arrows.size()) throw std::invalid_argument("module file: missing map lines");
        validate_representation(cur);
        mods.push_back(cur);
        open = false;
    };
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw)) continue;
        if (kw == "module") {
            close();
            cur = Representation{};
            cur.quiver = rq;
            open = true;
            next_map = 0;
        } else if (kw == "dims") {
            if (!open) throw std::invalid_argument("module file: dims before module");
            int d;
            cur.dims.clear();
            while (ls >> d) cur.dims.push_back(d);
            if (static_cast<int>(cur.dims.size()) != rq.n) throw std::invalid_argument("module file: wrong dims length");
        } else if (kw == "map") {
            if (!open || cur.dims.empty()) throw std::invalid_argument("module file: map before dims");
            size_t idx;
            int rows, cols;
            if (!(ls >> idx >> rows >> cols)) throw std::invalid_argument("module file: bad map header");
            if (idx != next_map) throw std::invalid_argument("module file: map indices out of order");
            auto [s, t] = rq.arrows[idx];
            if (rows != cur.dims[t - 1] || cols != cur.dims[s - 1])
                throw std::invalid_argument("module file: map shape mismatch");
            RatMatrix m(rows, cols);
            for (int r = 0; r < rows; ++r) {
                std::string row_line;
                if (!std::getline(in, row_line)) throw std::invalid_argument("module file: truncated matrix");
                std::istringstream rs(row_line);
                std::string tok;
                for (int c = 0; c < cols; ++c) {
                    if (!(rs >> tok)) throw std::invalid_argument("module file: short matrix row");
                    m.at(r, c) = rat_parse(tok);
                }
            }
            cur.maps.push_back(std::move(m));
            ++next_map;
        } else {
            throw std::invalid_argument("module file: unknown keyword '" + kw + "'");
        }
    }
    close();
    return mods;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write file: " + path);
    out << content;
}

}  // namespace sq
