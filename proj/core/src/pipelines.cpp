#include "twocon/pipelines.hpp"

#include <stdexcept>

#include "twocon/wser.hpp"

namespace twocon::pipelines {

Truncation network_trunc(Truncation g) { return Truncation(std::max(g.n_max - 2, 0), g.m_max); }

SpeciesInput SpeciesInput::empty() { return {}; }

SpeciesInput SpeciesInput::graph_list(std::vector<SimpleGraph> graphs) {
    for (const SimpleGraph& g : graphs)
        if (g.n < 4 || !oracle::is_k_connected(g, 3))
            throw std::invalid_argument("SpeciesInput: core graph is not 3-connected on >= 4 vertices");
    SpeciesInput in;
    in.tag_ = Tag::GraphList;
    in.graphs_ = std::move(graphs);
    return in;
}

SpeciesInput SpeciesInput::data_file(const std::string& wser_path) {
    auto file = wser::read_file(wser_path);
    if (file.kind != wser::Kind::Graph) throw std::invalid_argument("core data file must have kind=graph");
    return data(std::move(file.series));
}

SpeciesInput SpeciesInput::data(IndexSeries w_f) {
    SpeciesInput in;
    in.tag_ = Tag::Data;
    in.series_ = std::move(w_f);
    return in;
}

SpeciesInput SpeciesInput::union_of(std::vector<SpeciesInput> parts) {
    SpeciesInput in;
    in.tag_ = Tag::Union;
    in.parts_ = std::move(parts);
    return in;
}

IndexSeries SpeciesInput::resolve(Truncation t) const {
    switch (tag_) {
        case Tag::Empty:
            return IndexSeries(t);
        case Tag::GraphList: {
            IndexSeries w(t);
            for (const SimpleGraph& g : graphs_) w += graph_index_series(g, t);
            return w;
        }
        case Tag::Data:
            return series_->truncated(t);
        case Tag::Union: {
            IndexSeries w(t);
            for (const SpeciesInput& p : parts_) w += p.resolve(t);
            return w;
        }
    }
    return IndexSeries(t);
}

namespace {

IndexSeries core_series(Family f, Truncation tg, const CoreSource& source) {
    if (f == Family::SeriesParallel) return SpeciesInput::empty().resolve(tg);
    SpeciesInput base = SpeciesInput::empty();
    if (source.path) {
        base = SpeciesInput::data_file(*source.path);
    } else {
        if (tg.n_max > oracle::kMaxVertices)
            throw std::invalid_argument("truncation too large for the built-in oracle (max " +
                                        std::to_string(oracle::kMaxVertices) + " vertices); supply --f-data FILE");
        auto fam = (f == Family::All) ? oracle::OracleFamily::ThreeConnectedAll
                                      : oracle::OracleFamily::ThreeConnectedPlanar;
        base = SpeciesInput::data(oracle::oracle_index_series(fam, tg.n_max, tg));
    }
    if (f == Family::K33Free)
        base = SpeciesInput::union_of(
            {std::move(base), SpeciesInput::graph_list({SimpleGraph::complete(5)})});
    return base.resolve(tg);
}

}  // namespace

FamilyInput family_input(Family f, Truncation tg, const CoreSource& source) {
    FamilyInput in{core_series(f, tg, source), IndexSeries(), IndexSeries()};
    auto [p01, m01] = derivative_network_series(in.w_f);
    in.f01_plus = std::move(p01);
    in.f01_minus = std::move(m01);
    return in;
}

IndexPipeline run_index_pipeline(const FamilyInput& in, Truncation tg) {
    NetworkSystem sys = solve_network_system(in.f01_plus, in.f01_minus, network_trunc(tg));
    IndexSeries w_b = two_connected_series(in.w_f, sys, tg);
    return {std::move(sys), std::move(w_b)};
}

TildePipeline run_tilde_pipeline(const FamilyInput& in, Truncation tg) {
    TildeNetworkSystem sys = solve_tilde_networks(in.f01_plus, in.f01_minus, network_trunc(tg));
    BiSeries b = tilde_two_connected(in.w_f, sys, tg);
    return {std::move(sys), std::move(b)};
}

LabelledPipeline run_labelled_pipeline(const FamilyInput& in, Truncation tg) {
    BiSeries f01_egf = to_egf(in.f01_plus);
    BiSeries r = solve_labelled_networks(f01_egf, network_trunc(tg));
    BiSeries b = labelled_two_connected(r, tg);
    return {std::move(r), std::move(b)};
}

namespace {

// The K5 core occupies five vertices, so the planar network system only needs
// n_max - 5 internal vertices (each slot adds at least its plethysm weight).
Truncation pp_network_trunc(Truncation tg) { return Truncation(std::max(tg.n_max - 5, 0), tg.m_max); }

}  // namespace

BiSeries projective_planar_tilde(Truncation tg, const CoreSource& source) {
    Truncation tn = pp_network_trunc(tg);
    Truncation core_trunc = Truncation::for_graphs(tn.n_max + 2);
    FamilyInput in = family_input(Family::Planar, core_trunc, source);
    TildeNetworkSystem sys = solve_tilde_networks(in.f01_plus, in.f01_minus, tn);
    return compose_cores_tilde({CoreGraph::K5}, sys.r, sys.r_tau, tg);
}

BiSeries projective_planar_egf(Truncation tg, const CoreSource& source) {
    Truncation tn = pp_network_trunc(tg);
    Truncation core_trunc = Truncation::for_graphs(tn.n_max + 2);
    FamilyInput in = family_input(Family::Planar, core_trunc, source);
    BiSeries r = solve_labelled_networks(to_egf(in.f01_plus), tn);
    return compose_cores_egf({CoreGraph::K5}, r, tg);
}

}  // namespace twocon::pipelines
