#ifndef IRRPOLY_EMIT_HPP
#define IRRPOLY_EMIT_HPP

#include "irrpoly/brute.hpp"
#include "irrpoly/census.hpp"
#include "irrpoly/graded.hpp"
#include "irrpoly/qpoly.hpp"
#include "irrpoly/spectral.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace irrpoly {

enum class Format { json, csv, md };
Format parse_format(const std::string& text);

using Json = nlohmann::ordered_json;

/// {"5": "1", "4": "1/2", ...}: exponents descending, values exact rationals.
Json qpoly_json(const QPoly& p);
/// {"trunc": T, "coeffs": ["c0", ...]} (+ "convention" when given).
Json series_json(const Series& s, std::optional<SymConvention> conv = std::nullopt);

std::string emit_count(int d, int n, const QPoly& count, const std::vector<Int>& eval_points,
                       Format fmt);
std::string emit_euler(int d_max, int n_max, const std::vector<EulerRow>& rows, Format fmt);
std::string emit_carlitz(int q, int n, const std::vector<CarlitzRow>& rows, Format fmt);
std::string emit_hyde(const HydeResult& res, Format fmt);
std::string emit_series(int d, const Series& s, SymConvention conv, Format fmt);
/// Pipeline value vs the tabulated closed form, flagging the first divergence.
std::string emit_series_comparison(int d, const Series& pipeline, const Series& reference,
                                   const RationalForm& reference_form, SymConvention conv,
                                   Format fmt);
std::string emit_e1(const E1Window& window, const std::vector<DifferentialRule>& rules,
                    const BettiWindow* betti, Format fmt);
std::string emit_betti(const BettiWindow& w, Format fmt);
std::string emit_bounds(const BoundsReport& r, Format fmt);
std::string emit_census(const BruteContext::Census& census, int d, int n, int p, Format fmt);
std::string emit_cross_validation(const CrossValidationReport& report, Format fmt);
std::string emit_vanishing_audit(const VanishingAuditReport& report, Format fmt);

} // namespace irrpoly

#endif
