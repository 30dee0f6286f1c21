#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "twocon/bi_series.hpp"
#include "twocon/index_series.hpp"

namespace twocon::wser {

enum class Kind { Graph, NetPlus, NetMinus };

/// WSER v1: line-oriented, UTF-8, LF endings, byte-deterministic.
///   WSER 1 nmax=<N> mmax=<M> kind=<graph|netplus|netminus>
///   a=<k:e,...> b=<k:e,...> c=<k:e,...> coef=<p>/<q>
/// Sparse index:exponent pairs in increasing index order, `-` for an empty
/// family, coefficients in lowest terms, lines in canonical monomial order.
void write(std::ostream& os, const IndexSeries& s, Kind kind);
std::string to_string(const IndexSeries& s, Kind kind);
void write_file(const std::string& path, const IndexSeries& s, Kind kind);

struct ReadResult {
    IndexSeries series;
    Kind kind;
};
ReadResult read(std::istream& is);
ReadResult read_file(const std::string& path);

/// Count table rows (n, m, count), sorted by (n, m).
struct CountRow {
    int n, m;
    Integer count;
};
std::string to_csv(const std::vector<CountRow>& rows);
std::string to_json(const std::vector<CountRow>& rows);

/// Rows of a counting series: tilde coefficients directly, or EGF
/// coefficients times n! for labelled counts. Throws IntegrityError when a
/// value is not a non-negative integer.
std::vector<CountRow> unlabelled_rows(const BiSeries& tilde);
std::vector<CountRow> labelled_rows(const BiSeries& egf);

}  // namespace twocon::wser
