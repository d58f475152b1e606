#include "mixnet/pointset.hpp"

#include <fstream>
#include <sstream>

namespace mixnet {

void write_csv(const PointSet& P, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    long long base = P.badic ? P.b : P.denom;
    int n = P.badic ? P.n : 1;
    out << "# base=" << base << " n=" << n << " d=" << P.d << " family=" << P.family << "\n";
    for (const auto& row : P.num) {
        for (int c = 0; c < P.d; ++c) {
            if (c) out << ',';
            out << row[c];
        }
        out << '\n';
    }
}

PointSet read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::string line;
    if (!std::getline(in, line) || line.rfind("# ", 0) != 0)
        throw std::runtime_error("missing point CSV header in " + path);
    PointSet P;
    long long base = 0;
    int n = 0;
    {
        std::istringstream hs(line.substr(2));
        std::string tok;
        while (hs >> tok) {
            auto eq = tok.find('=');
            if (eq == std::string::npos) continue;
            std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
            if (key == "base")
                base = std::stoll(val);
            else if (key == "n")
                n = std::stoi(val);
            else if (key == "d")
                P.d = std::stoi(val);
            else if (key == "family")
                P.family = val;
        }
    }
    if (base < 2 || n < 1 || P.d < 1) throw std::runtime_error("bad point CSV header in " + path);
    P.b = base;
    P.n = n;
    P.badic = true;
    P.denom = ipow(base, n);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::vector<long long> row;
        std::string cell;
        while (std::getline(ls, cell, ',')) row.push_back(std::stoll(cell));
        if ((int)row.size() != P.d) throw std::runtime_error("wrong column count in " + path);
        for (long long v : row)
            if (v < 0 || v >= P.denom) throw std::runtime_error("numerator out of range in " + path);
        P.num.push_back(std::move(row));
    }
    return P;
}

}  // namespace mixnet
