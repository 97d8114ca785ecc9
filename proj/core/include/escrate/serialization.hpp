#pragma once

#include <string>
#include <vector>

#include "escrate/experiments.hpp"

namespace escrate {

// Fixed formatting: floats at 12 significant digits, exact endpoints as
// rational strings. Identical inputs serialize byte-identically.
std::string format_g12(double v);
double round12(double v);

std::string json_polynomial(const IntPolynomial& p);
std::string json_transfer_matrix(const TransferMatrix& t);
std::string json_correlation(const Word& u, const Word& w, const IntPolynomial& c);
std::string json_period(const WordCollection& g);
std::string json_rfunc(const WordCollection& g, const RFunction& r);
std::string json_entropy(int q, const std::string& forbidden, const EntropyResult& e,
                         const TransferMatrix* matrix = nullptr);
std::string json_escape(const HoleSpec& h, const EscapeRateResult& r);
std::string json_compare(const HoleSpec& h1, const HoleSpec& h2, const ComparisonResult& c);
std::string json_series(int q, const WordCollection& hole, const std::vector<BigInt>& coeffs);
std::string json_count(int q, const WordCollection& hole, int n, const BigInt& value,
                       const std::string& method);
std::string json_parry(const ParryData& pd, const std::string& cylinder_word, bool has_cylinder,
                       double cylinder_mu);
std::string json_threshold(int t, int p, int p2, const std::string& variant, const BigInt& value);
std::string json_table(const std::vector<TableRow>& rows, double tolerance);
std::string csv_table(const std::vector<TableRow>& rows);
std::string json_verification(const VerificationReport& report);
std::string csv_verification(const VerificationReport& report);
// CSV batch row for escape results: q,hole,base,rho,bracket_width.
std::string csv_escape(const HoleSpec& h, const EscapeRateResult& r);

}  // namespace escrate
