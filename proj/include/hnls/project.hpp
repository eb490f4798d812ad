#pragma once

#include "hnls/field.hpp"
#include "hnls/lattice.hpp"

namespace hnls {

/// Frequency projections: coefficient-wise multiplication by the selector
/// symbol. Sharp selectors are idempotent; the smooth dyadic bands telescope,
/// sum_{dyadic N' <= N} P_{N'} + P_1 = P_{<= N} coefficient-wise.
///
/// P_{<=N}: product of phi(k_j / N) over coordinates (phi sharp or smooth).
SpectralField project_le(const SpectralField& f, std::int64_t n, const CutoffProfile& cutoff);

/// Dyadic band P_N := P_{<=N} - P_{<=N/2} for N >= 2; P_1 has symbol
/// prod_j phi(k_j). In one dimension this is phi(k/N) - phi(2k/N) verbatim.
SpectralField project_band(const SpectralField& f, std::int64_t n, const CutoffProfile& cutoff);

/// Sharp cube projection P_C (symbol = indicator of C). Selectors may clip:
/// an empty intersection returns the zero field.
SpectralField project_cube(const SpectralField& f, const Cube& cube);

/// Selector symbol values, exposed for oracle tests.
double le_symbol(const CutoffProfile& cutoff, std::span<const std::int64_t> k, std::int64_t n);
double band_symbol(const CutoffProfile& cutoff, std::span<const std::int64_t> k, std::int64_t n);

} // namespace hnls
