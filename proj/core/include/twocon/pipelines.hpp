#pragma once

#include <optional>
#include <string>

#include "twocon/oracle.hpp"
#include "twocon/solver.hpp"

namespace twocon::pipelines {

enum class Family { SeriesParallel, Planar, K33Free, All };

/// A class of 3-connected cores: empty, an explicit graph list (each member
/// must be 3-connected on at least 4 vertices), an ingested index series
/// (WSER file or in-memory), or a union of inputs. Ingested data replaces
/// oracle data outright; a union sums class-disjoint inputs.
class SpeciesInput {
public:
    static SpeciesInput empty();
    static SpeciesInput graph_list(std::vector<SimpleGraph> graphs);
    static SpeciesInput data_file(const std::string& wser_path);
    static SpeciesInput data(IndexSeries w_f);
    static SpeciesInput union_of(std::vector<SpeciesInput> parts);

    /// The core edge index series at the given truncation.
    IndexSeries resolve(Truncation t) const;

private:
    enum class Tag { Empty, GraphList, Data, Union };
    Tag tag_ = Tag::Empty;
    std::vector<SimpleGraph> graphs_;
    std::optional<IndexSeries> series_;
    std::vector<SpeciesInput> parts_;
};

/// Where the 3-connected core data comes from: the built-in oracle (capped at
/// 9 vertices, 8 by default workflows) or an ingested WSER file.
struct CoreSource {
    static CoreSource oracle() { return {}; }
    static CoreSource file(std::string p) { return {std::move(p)}; }
    std::optional<std::string> path;
};

struct FamilyInput {
    IndexSeries w_f;
    IndexSeries f01_plus, f01_minus;
};

/// Resolves the core class of a family at the given graph truncation.
FamilyInput family_input(Family f, Truncation graph_trunc, const CoreSource& source);

/// Network truncation used inside a graph pipeline at graph_trunc.
Truncation network_trunc(Truncation graph_trunc);

struct IndexPipeline {
    NetworkSystem sys;
    IndexSeries w_b;
};
IndexPipeline run_index_pipeline(const FamilyInput& in, Truncation graph_trunc);

struct TildePipeline {
    TildeNetworkSystem sys;
    BiSeries b_tilde;
};
TildePipeline run_tilde_pipeline(const FamilyInput& in, Truncation graph_trunc);

struct LabelledPipeline {
    BiSeries r_egf;
    BiSeries b_egf;
};
LabelledPipeline run_labelled_pipeline(const FamilyInput& in, Truncation graph_trunc);

/// K33-free projective-planar graphs: K5 with strongly planar networks on
/// its edges; tilde series through x^{n_max}.
BiSeries projective_planar_tilde(Truncation graph_trunc, const CoreSource& source);
BiSeries projective_planar_egf(Truncation graph_trunc, const CoreSource& source);

}  // namespace twocon::pipelines
