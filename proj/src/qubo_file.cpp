#include "ecq/qubo_file.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>
#include <vector>

#include "ecq/error.hpp"

namespace ecq {

void write_qubo_file(std::ostream& out, const QuboMatrix& q) {
    const int n = q.size();
    int n_diag = 0, n_off = 0;
    for (int i = 0; i < n; ++i) {
        if (q.at(i, i) != 0.0) ++n_diag;
        for (int j = i + 1; j < n; ++j)
            if (q.at(i, j) + q.at(j, i) != 0.0) ++n_off;
    }
    out << "c format-version 1\n";
    if (q.meta().kind == QuboKind::ec)
        out << "c ec qubo tau=" << q.meta().tau << " p0=" << std::setprecision(17)
            << q.meta().p0 << " p1=" << q.meta().p1 << "\n";
    out << "p qubo 0 " << n << " " << n_diag << " " << n_off << "\n";
    out << std::setprecision(17);
    for (int i = 0; i < n; ++i)
        if (q.at(i, i) != 0.0) out << i << " " << i << " " << q.at(i, i) << "\n";
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double coupler = q.at(i, j) + q.at(j, i);
            if (coupler != 0.0) out << i << " " << j << " " << coupler << "\n";
        }
}

std::string qubo_file_string(const QuboMatrix& q) {
    std::ostringstream out;
    write_qubo_file(out, q);
    return out.str();
}

QuboMatrix read_qubo_file(std::istream& in) {
    std::string raw;
    int line_no = 0;
    int n = -1;
    long want_diag = -1, want_off = -1;
    long seen_diag = 0, seen_off = 0;
    Matrix q;
    while (std::getline(in, raw)) {
        ++line_no;
        std::istringstream ls(raw);
        std::string first;
        if (!(ls >> first)) continue;  // blank line
        if (first == "c") continue;
        if (first == "p") {
            std::string kind;
            int zero = -1;
            if (!(ls >> kind >> zero >> n >> want_diag >> want_off) || kind != "qubo" || zero != 0)
                throw ParseError(line_no, "malformed problem line '" + raw + "'");
            if (n < 1) throw ParseError(line_no, "node count must be >= 1");
            q = Matrix(n, n);
            continue;
        }
        if (n < 0) throw ParseError(line_no, "entry before the 'p qubo' problem line");
        int i = -1, j = -1;
        double v = 0.0;
        std::istringstream es(raw);
        if (!(es >> i >> j >> v)) throw ParseError(line_no, "expected 'i j value'");
        if (i < 0 || j < 0 || i >= n || j >= n) throw ParseError(line_no, "index out of range");
        if (j < i) std::swap(i, j);
        if (i == j) {
            q(i, i) = v;
            ++seen_diag;
        } else {
            // Split the coupler evenly; energies over {0,1}^n are unchanged.
            q(i, j) = v / 2.0;
            q(j, i) = v / 2.0;
            ++seen_off;
        }
    }
    if (n < 0) throw std::invalid_argument("missing 'p qubo' problem line");
    if (want_diag >= 0 && seen_diag != want_diag)
        throw std::invalid_argument("diagonal entry count mismatch: header says " +
                                    std::to_string(want_diag) + ", file has " +
                                    std::to_string(seen_diag));
    if (want_off >= 0 && seen_off != want_off)
        throw std::invalid_argument("coupler count mismatch: header says " +
                                    std::to_string(want_off) + ", file has " +
                                    std::to_string(seen_off));
    return custom_qubo(std::move(q));
}

QuboMatrix parse_qubo_file(const std::string& text) {
    std::istringstream in(text);
    return read_qubo_file(in);
}

}  // namespace ecq
