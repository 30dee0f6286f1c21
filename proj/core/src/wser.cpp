#include "twocon/wser.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "twocon/algebra.hpp"

namespace twocon {

Rational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("parse_rational: empty string");
    Rational r;
    if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("parse_rational: bad rational '" + s + "'");
    r.canonicalize();
    return r;
}

}  // namespace twocon

namespace twocon::wser {

namespace {

const char* kind_name(Kind k) {
    switch (k) {
        case Kind::Graph: return "graph";
        case Kind::NetPlus: return "netplus";
        case Kind::NetMinus: return "netminus";
    }
    return "graph";
}

Kind kind_from(const std::string& s) {
    if (s == "graph") return Kind::Graph;
    if (s == "netplus") return Kind::NetPlus;
    if (s == "netminus") return Kind::NetMinus;
    throw std::invalid_argument("WSER: unknown kind '" + s + "'");
}

void write_family(std::ostream& os, const CycleMonomial& m, Var f) {
    bool any = false;
    m.for_each([&](Var fam, int idx, int exp) {
        if (fam != f) return;
        os << (any ? "," : "") << idx << ":" << exp;
        any = true;
    });
    if (!any) os << "-";
}

void parse_family(const std::string& body, Var f, CycleMonomial& m) {
    if (body == "-") return;
    std::stringstream ss(body);
    std::string pair;
    int last_idx = 0;
    while (std::getline(ss, pair, ',')) {
        auto colon = pair.find(':');
        if (colon == std::string::npos) throw std::invalid_argument("WSER: bad pair '" + pair + "'");
        int idx = std::stoi(pair.substr(0, colon));
        int exp = std::stoi(pair.substr(colon + 1));
        if (idx <= last_idx) throw std::invalid_argument("WSER: indices must increase");
        last_idx = idx;
        m.mul_var(f, idx, exp);
    }
}

}  // namespace

void write(std::ostream& os, const IndexSeries& s, Kind kind) {
    os << "WSER 1 nmax=" << s.trunc().n_max << " mmax=" << s.trunc().m_max << " kind=" << kind_name(kind)
       << "\n";
    for (const auto& [m, c] : s.sorted_terms()) {
        os << "a=";
        write_family(os, m, Var::A);
        os << " b=";
        write_family(os, m, Var::B);
        os << " c=";
        write_family(os, m, Var::C);
        os << " coef=" << rational_str(c) << "\n";
    }
}

std::string to_string(const IndexSeries& s, Kind kind) {
    std::ostringstream os;
    write(os, s, kind);
    return os.str();
}

void write_file(const std::string& path, const IndexSeries& s, Kind kind) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("WSER: cannot open '" + path + "' for writing");
    write(f, s, kind);
}

ReadResult read(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw std::invalid_argument("WSER: empty input");
    std::stringstream hdr(line);
    std::string magic, version, nfield, mfield, kfield;
    hdr >> magic >> version >> nfield >> mfield >> kfield;
    if (magic != "WSER" || version != "1" || nfield.rfind("nmax=", 0) != 0 || mfield.rfind("mmax=", 0) != 0 ||
        kfield.rfind("kind=", 0) != 0)
        throw std::invalid_argument("WSER: bad header '" + line + "'");
    Truncation t(std::stoi(nfield.substr(5)), std::stoi(mfield.substr(5)));
    Kind kind = kind_from(kfield.substr(5));
    IndexSeries s(t);
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::stringstream ls(line);
        std::string af, bf, cf, coef;
        ls >> af >> bf >> cf >> coef;
        if (af.rfind("a=", 0) != 0 || bf.rfind("b=", 0) != 0 || cf.rfind("c=", 0) != 0 ||
            coef.rfind("coef=", 0) != 0)
            throw std::invalid_argument("WSER: bad line '" + line + "'");
        CycleMonomial m;
        parse_family(af.substr(2), Var::A, m);
        parse_family(bf.substr(2), Var::B, m);
        parse_family(cf.substr(2), Var::C, m);
        s.add_term(m, parse_rational(coef.substr(5)));
    }
    return {std::move(s), kind};
}

ReadResult read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("WSER: cannot open '" + path + "'");
    return read(f);
}

std::string to_csv(const std::vector<CountRow>& rows) {
    std::ostringstream os;
    os << "n,m,count\n";
    for (const auto& r : rows) os << r.n << "," << r.m << "," << r.count.get_str() << "\n";
    return os.str();
}

std::string to_json(const std::vector<CountRow>& rows) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < rows.size(); ++i) {
        if (i) os << ",";
        os << "\n  {\"n\": " << rows[i].n << ", \"m\": " << rows[i].m << ", \"count\": \""
           << rows[i].count.get_str() << "\"}";
    }
    os << (rows.empty() ? "]" : "\n]") << "\n";
    return os.str();
}

std::vector<CountRow> unlabelled_rows(const BiSeries& tilde) {
    require_count_series(tilde, "unlabelled counts");
    std::vector<CountRow> rows;
    for (int n = 0; n <= tilde.trunc().n_max; ++n)
        for (int m = 0; m <= tilde.trunc().m_max; ++m) {
            Rational c = tilde.coeff(n, m);
            if (sgn(c) != 0) rows.push_back({n, m, to_integer(c)});
        }
    return rows;
}

std::vector<CountRow> labelled_rows(const BiSeries& egf) {
    std::vector<CountRow> rows;
    for (int n = 0; n <= egf.trunc().n_max; ++n) {
        Integer nf = factorial(static_cast<unsigned>(n));
        for (int m = 0; m <= egf.trunc().m_max; ++m) {
            Rational c = egf.coeff(n, m) * Rational(nf);
            if (sgn(c) == 0) continue;
            if (sgn(c) < 0 || !is_integer(c))
                throw IntegrityError("labelled counts: coefficient at (" + std::to_string(n) + "," +
                                     std::to_string(m) + ") times n! is " + c.get_str());
            rows.push_back({n, m, to_integer(c)});
        }
    }
    return rows;
}

}  // namespace twocon::wser
