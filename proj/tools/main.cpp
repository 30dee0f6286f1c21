// Command-line surface: exact tables for 2-connected graph and two-pole
// network classes with prescribed 3-connected components, plus the
// brute-force oracle (class counts, core data files, consistency checks).

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <string>

#include "twocon/pipelines.hpp"
#include "twocon/wser.hpp"

namespace {

using namespace twocon;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open '" + out_path + "' for writing");
    f << text;
}

pipelines::Family parse_family(const std::string& s) {
    if (s == "sp") return pipelines::Family::SeriesParallel;
    if (s == "planar") return pipelines::Family::Planar;
    if (s == "k33free") return pipelines::Family::K33Free;
    if (s == "all") return pipelines::Family::All;
    throw CLI::ValidationError("--family", "unknown family '" + s + "'");
}

int run_compute(const std::string& family, const std::string& kind, const std::string& count, int n_max,
                int m_max, const std::string& f_data, const std::string& format, const std::string& out) {
    const bool labelled = count == "labelled";
    pipelines::CoreSource source =
        f_data == "oracle" ? pipelines::CoreSource::oracle() : pipelines::CoreSource::file(f_data);

    std::vector<wser::CountRow> rows;
    if (family == "pp") {
        if (kind != "graphs") throw CLI::ValidationError("--kind", "family pp supports --kind graphs only");
        Truncation tg(n_max, m_max > 0 ? m_max : n_max * (n_max - 1) / 2);
        rows = labelled ? wser::labelled_rows(pipelines::projective_planar_egf(tg, source))
                        : wser::unlabelled_rows(pipelines::projective_planar_tilde(tg, source));
    } else {
        pipelines::Family fam = parse_family(family);
        if (kind == "graphs") {
            Truncation tg(n_max, m_max > 0 ? m_max : n_max * (n_max - 1) / 2);
            pipelines::FamilyInput in = pipelines::family_input(fam, tg, source);
            rows = labelled ? wser::labelled_rows(pipelines::run_labelled_pipeline(in, tg).b_egf)
                            : wser::unlabelled_rows(pipelines::run_tilde_pipeline(in, tg).b_tilde);
        } else if (kind == "networks" || kind == "networks-tau") {
            Truncation tn(n_max, m_max > 0 ? m_max : (n_max + 2) * (n_max + 1) / 2);
            Truncation core_trunc = Truncation::for_graphs(n_max + 2);
            pipelines::FamilyInput in = pipelines::family_input(fam, core_trunc, source);
            const bool tau = kind == "networks-tau";
            if (labelled && !tau) {
                rows = wser::labelled_rows(solve_labelled_networks(to_egf(in.f01_plus), tn));
            } else if (!labelled) {
                TildeNetworkSystem sys = solve_tilde_networks(in.f01_plus, in.f01_minus, tn);
                rows = wser::unlabelled_rows(tau ? sys.r_tau : sys.r);
            } else {
                NetworkSystem sys = solve_network_system(in.f01_plus, in.f01_minus, tn);
                rows = wser::labelled_rows(to_egf(sys.rho_minus));
            }
        } else {
            throw CLI::ValidationError("--kind", "unknown kind '" + kind + "'");
        }
    }
    emit(format == "json" ? wser::to_json(rows) : wser::to_csv(rows), out);
    return 0;
}

oracle::OracleFamily oracle_family(const std::string& s) {
    if (s == "sp") return oracle::OracleFamily::TwoConnectedSeriesParallel;
    if (s == "planar") return oracle::OracleFamily::TwoConnectedPlanar;
    if (s == "k33free") return oracle::OracleFamily::TwoConnectedK33Free;
    if (s == "all") return oracle::OracleFamily::TwoConnectedAll;
    throw CLI::ValidationError("--family", "unknown family '" + s + "'");
}

int run_identity_checks(int n_max);

int run_oracle(const std::string& check, const std::string& emit_what, const std::string& family, int n_max,
               const std::string& format, const std::string& out) {
    if (!check.empty()) {
        if (check == "dissymmetry") {
            auto rep = oracle::dissymmetry_check(n_max);
            if (rep.ok()) {
                std::cout << "PASS dissymmetry: " << rep.graphs_checked << " graphs, 0 failures\n";
                return 0;
            }
            std::cout << "FAIL dissymmetry: " << rep.failures << " of " << rep.graphs_checked << " graphs\n";
            return 1;
        }
        if (check == "identities") return run_identity_checks(n_max);
        throw CLI::ValidationError("--check", "unknown check '" + check + "'");
    }
    if (emit_what == "counts") {
        auto fam = oracle_family(family);
        std::vector<wser::CountRow> rows;
        for (int n = 2; n <= n_max; ++n)
            for (const auto& [m, cnt] : oracle::class_counts(fam, n)) rows.push_back({n, m, cnt});
        emit(format == "json" ? wser::to_json(rows) : wser::to_csv(rows), out);
        return 0;
    }
    if (emit_what == "wf-planar" || emit_what == "wf-all") {
        Truncation t = Truncation::for_graphs(n_max);
        auto fam = emit_what == "wf-planar" ? oracle::OracleFamily::ThreeConnectedPlanar
                                            : oracle::OracleFamily::ThreeConnectedAll;
        emit(wser::to_string(oracle::oracle_index_series(fam, n_max, t), wser::Kind::Graph), out);
        return 0;
    }
    throw CLI::ValidationError("oracle", "need --check or --emit");
}

int run_identity_checks(int n_max) {
    int failures = 0;
    auto report = [&](const char* name, bool ok) {
        std::cout << (ok ? "PASS " : "FAIL ") << name << "\n";
        if (!ok) ++failures;
    };

    {  // cycle closed form against the automorphism sum
        bool ok = true;
        Truncation t = Truncation::for_graphs(8);
        for (int n = 3; n <= 8; ++n)
            ok = ok && cycle_index_series(n, t) == graph_index_series(SimpleGraph::cycle(n), t);
        report("cycle-index closed form (n = 3..8)", ok);
    }
    {  // exp/log round trip on a small network series
        Truncation t(5, 8);
        IndexSeries f(t);
        f.add_term(CycleMonomial::var(Var::A, 1).times(CycleMonomial::var(Var::B, 1, 2)), ratio(1, 2));
        f.add_term(CycleMonomial::var(Var::A, 2).times(CycleMonomial::var(Var::C, 2)), ratio(-2, 3));
        f.add_term(CycleMonomial::var(Var::B, 1), 1);
        report("exp/log round trip", log_series(exp_series(f)) == f);
    }
    {  // derivative identity: toEgf(B01+) = (2/x^2) d/dy toEgf(W_B)
        int n = std::min(n_max, 6);
        Truncation t = Truncation::for_graphs(n);
        IndexSeries w_b = oracle::oracle_index_series(oracle::OracleFamily::TwoConnectedAll, n, t);
        auto [p01, m01] = derivative_network_series(w_b);
        BiSeries lhs = to_egf(p01);
        BiSeries rhs(p01.trunc());
        BiSeries dy = to_egf(w_b).derivative_y();
        for (int i = 0; i + 2 <= t.n_max; ++i)
            for (int j = 0; j <= p01.trunc().m_max; ++j) rhs.set(i, j, dy.coeff(i + 2, j) * 2);
        report("edge-rooting derivative identity", lhs == rhs);
    }
    {  // beta/gamma invert the series-parallel network series
        Truncation tn(8, 9);
        NetworkSystem sys = solve_network_system(IndexSeries(tn), IndexSeries(tn), tn);
        auto [beta, gamma] = beta_gamma(tn);
        BiSeries yb = bracket_xy(sys.rho_plus, BiSeries::x(tn), beta, gamma, tn);
        BiSeries yg = bracket_xy(sys.rho_minus, BiSeries::x(tn), beta, gamma, tn);
        report("beta/gamma network inversion (8,9)", yb == BiSeries::y(tn) && yg == BiSeries::y(tn));
    }
    {  // series-parallel closed form under [x; beta; gamma]
        Truncation t(10, 11);
        Truncation tg = Truncation::for_graphs(10);
        pipelines::FamilyInput in{IndexSeries(tg), IndexSeries(), IndexSeries()};
        IndexSeries w_gsp = pipelines::run_index_pipeline(in, tg).w_b;
        auto [beta, gamma] = beta_gamma(t);
        BiSeries lhs = bracket_xy(w_gsp, BiSeries::x(t), beta, gamma, t);
        report("series-parallel bracket closed form (10,11)", lhs == gsp_bracket_closed_form(t));
    }
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact enumeration of 2-connected graphs and two-pole networks by 3-connected components"};
    app.require_subcommand(1);

    std::string family = "sp", kind = "graphs", count = "unlabelled", f_data = "oracle", format = "csv", out;
    int n_max = 8, m_max = 0;

    CLI::App* compute = app.add_subcommand("compute", "solve a family pipeline and print coefficient tables");
    compute->add_option("--family", family, "sp|planar|k33free|pp|all")->required();
    compute->add_option("--kind", kind, "graphs|networks|networks-tau");
    compute->add_option("--count", count, "labelled|unlabelled");
    compute->add_option("--n-max", n_max, "vertex (or internal-vertex) bound")->required();
    compute->add_option("--m-max", m_max, "edge bound (default: C(n,2) for graphs, C(n+2,2) for networks)");
    compute->add_option("--f-data", f_data, "'oracle' or a WSER file with the 3-connected core series");
    compute->add_option("--format", format, "csv|json");
    compute->add_option("--out", out, "output file (default stdout)");

    std::string check, emit_what;
    CLI::App* orc = app.add_subcommand("oracle", "brute-force ground truth: counts, core data, checks");
    orc->add_option("--check", check, "dissymmetry|identities");
    orc->add_option("--emit", emit_what, "counts|wf-planar|wf-all");
    orc->add_option("--family", family, "sp|planar|k33free|all (for --emit counts)");
    orc->add_option("--n-max", n_max, "vertex bound")->required();
    orc->add_option("--format", format, "csv|json");
    orc->add_option("--out", out, "output file (default stdout)");

    CLI11_PARSE(app, argc, argv);
    try {
        if (compute->parsed()) return run_compute(family, kind, count, n_max, m_max, f_data, format, out);
        return run_oracle(check, emit_what, family, n_max, format, out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
