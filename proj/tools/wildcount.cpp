// wildcount: last-jump distributions of nilpotent wild extensions.

#include "wildcount/asymptotics.hpp"
#include "wildcount/error.hpp"
#include "wildcount/heisenberg.hpp"
#include "wildcount/json_io.hpp"
#include "wildcount/local_count.hpp"
#include "wildcount/ramification.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

using namespace wildcount;

namespace {

struct FieldOptions {
  int p = 0;
  int d = 0;
  std::uint64_t q = 0;

  // Resolves --p/--d/--q into (p, d); p defaults to `fallback_p`.
  std::pair<int, int> resolve(int fallback_p) const {
    int pp = p, dd = d;
    if (q != 0) {
      std::uint64_t rest = q;
      int base = 0;
      for (int f = 2; static_cast<std::uint64_t>(f) <= rest; ++f)
        if (rest % f == 0) {
          base = f;
          break;
        }
      int e = 0;
      while (base != 0 && rest % base == 0) {
        rest /= base;
        ++e;
      }
      if (base == 0 || rest != 1) throw UserError("--q must be a prime power");
      if ((pp != 0 && pp != base) || (dd != 0 && dd != e)) throw UserError("--q conflicts with --p/--d");
      pp = base;
      dd = e;
    }
    if (pp == 0) pp = fallback_p;
    if (dd == 0) dd = 1;
    return {pp, dd};
  }
};

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UserError("expected a comma-separated list of integers, got \"" + text + "\"");
    }
  }
  if (out.empty()) throw UserError("empty integer list");
  return out;
}

// "heisenberg:k", "abelian:n1,n2,..." or a path to a JSON algebra.
LieAlgebra load_algebra(const std::string& source, int p) {
  const auto colon = source.find(':');
  const std::string head = source.substr(0, colon);
  if (colon != std::string::npos && head == "heisenberg") {
    auto k = parse_int_list(source.substr(colon + 1));
    if (k.size() != 1) throw UserError("heisenberg:k takes a single k");
    return LieAlgebra::heisenberg(p == 0 ? 3 : p, k[0]);
  }
  if (colon != std::string::npos && head == "abelian")
    return LieAlgebra::abelian(p == 0 ? 3 : p, parse_int_list(source.substr(colon + 1)));
  LieAlgebraSpec spec = algebra_from_json(read_json_file(source));
  if (p != 0 && p != spec.p) throw UserError("--p disagrees with the algebra file");
  return LieAlgebra(std::move(spec));
}

// "a" or "a..b"
std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    int v = parse_int_list(text).at(0);
    return {v, v};
  }
  return {parse_int_list(text.substr(0, dots)).at(0), parse_int_list(text.substr(dots + 2)).at(0)};
}

void print_rows(const std::vector<std::string>& header, const std::vector<std::vector<json>>& rows,
                const std::string& format) {
  if (format == "json") {
    json out = json::array();
    for (const auto& row : rows) {
      json obj = json::object();
      for (std::size_t i = 0; i < header.size(); ++i) obj[header[i]] = row[i];
      out.push_back(obj);
    }
    std::cout << out.dump() << "\n";
    return;
  }
  for (std::size_t i = 0; i < header.size(); ++i) std::cout << (i ? "," : "") << header[i];
  std::cout << "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      std::cout << (i ? "," : "");
      if (row[i].is_string())
        std::cout << row[i].get<std::string>();
      else
        std::cout << row[i].dump();
    }
    std::cout << "\n";
  }
}

std::string big_to_string(const BigInt& x) { return x.str(); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Last-jump invariants of nilpotent wildly ramified extensions"};
  app.require_subcommand(1);
  std::string format = "csv";
  int jobs = 1;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  FieldOptions field;
  auto add_field_options = [&](CLI::App* cmd) {
    cmd->add_option("--p", field.p, "Residue characteristic");
    cmd->add_option("--d", field.d, "Degree of the residue field over F_p");
    cmd->add_option("--q", field.q, "Size of the residue field (alternative to --p/--d)");
    cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  };

  auto* lastjump_cmd = app.add_subcommand("lastjump", "Last jump of a local datum, with the independent oracle");
  std::string datum_path;
  lastjump_cmd->add_option("datum", datum_path, "Datum JSON file")->required();
  lastjump_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));

  auto* dist_cmd = app.add_subcommand("distribution", "Counts of local data by last jump");
  std::string algebra_source, vmax_text;
  dist_cmd->add_option("--algebra", algebra_source, "heisenberg:k, abelian:n1,n2,... or a JSON file")->required();
  dist_cmd->add_option("--vmax", vmax_text, "Largest last jump to tabulate")->required();
  add_field_options(dist_cmd);

  auto* table_cmd = app.add_subcommand("heisenberg-table", "Heisenberg counting tables");
  std::string table_kind, m_range = "0";
  int k_param = 1;
  std::string method = "bruteforce";
  table_cmd->add_option("kind", table_kind, "akm, isotropic or local")
      ->required()
      ->check(CLI::IsMember({"akm", "isotropic", "local"}));
  table_cmd->add_option("--k", k_param, "Heisenberg rank")->check(CLI::PositiveNumber);
  table_cmd->add_option("--m", m_range, "Frobenius depth m or range a..b");
  table_cmd->add_option("--method", method, "Counter for akm")
      ->check(CLI::IsMember({"bruteforce", "charsum", "stable"}));
  add_field_options(table_cmd);

  auto* global_cmd = app.add_subcommand("global-series", "Global counts over F_q(T) by last jump");
  std::string nmax_text;
  global_cmd->add_option("--algebra", algebra_source, "heisenberg:k, abelian:n1,n2,... or a JSON file")->required();
  global_cmd->add_option("--nmax", nmax_text, "Largest global last jump")->required();
  add_field_options(global_cmd);

  auto* asym_cmd = app.add_subcommand("asymptotics", "Growth constants (A, B, M)");
  std::string heisenberg_pk;
  auto* asym_alg = asym_cmd->add_option("--algebra", algebra_source, "Algebra for the (r+1)/M growth constants");
  auto* asym_h = asym_cmd->add_option("--heisenberg", heisenberg_pk, "p,k for the Heisenberg table");
  asym_alg->excludes(asym_h);
  asym_cmd->add_option("--p", field.p, "Residue characteristic for built-in algebras");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*lastjump_cmd) {
      LocalDatum D = datum_from_json(read_json_file(datum_path));
      const Rational jump = lastjump(D);
      const Rational oracle = lastjump_oracle(D);
      if (format == "json") {
        std::cout << json{{"lastjump", to_fraction(jump)}, {"oracle", to_fraction(oracle)}}.dump() << "\n";
      } else {
        std::cout << "lastjump,oracle\n" << to_fraction(jump) << "," << to_fraction(oracle) << "\n";
      }
      if (jump != oracle) {
        std::cerr << "error: last jump " << to_fraction(jump) << " disagrees with oracle " << to_fraction(oracle)
                  << "\n";
        return 1;
      }
    } else if (*dist_cmd) {
      auto [p, d] = field.resolve(0);
      auto algebra = std::make_shared<const LieAlgebra>(load_algebra(algebra_source, field.p));
      if (field.p == 0 && field.q == 0) p = algebra->p();
      if (p != algebra->p()) throw UserError("field and algebra have different characteristic");
      auto lie = std::make_shared<const LieBaseChange>(algebra, FiniteField::create(p, d));
      std::vector<std::vector<json>> rows;
      for (const auto& row : jump_distribution(lie, parse_rational(vmax_text), jobs))
        rows.push_back({row.jump.numerator(), row.jump.denominator(), row.count});
      print_rows({"jump_num", "jump_den", "count"}, rows, format);
    } else if (*table_cmd) {
      auto [p, d] = field.resolve(3);
      std::vector<std::vector<json>> rows;
      if (table_kind == "isotropic") {
        IsotropicCount c = isotropic_count(p, k_param);
        rows.push_back({p, k_param, c.brute_force, c.formula});
        print_rows({"p", "k", "brute_force", "formula"}, rows, format);
        if (c.brute_force != c.formula) throw InvariantViolation("isotropic count disagrees with the formula");
      } else {
        FiniteField F = FiniteField::create(p, d);
        auto [m_lo, m_hi] = parse_range(m_range);
        if (m_lo < 0 || m_hi < m_lo) throw UserError("bad --m range");
        for (int m = m_lo; m <= m_hi; ++m) {
          if (table_kind == "akm") {
            std::uint64_t value = 0;
            if (method == "bruteforce")
              value = a_km_bruteforce(k_param, m, F, jobs);
            else if (method == "charsum")
              value = m == 0 ? a_km_bruteforce(k_param, 0, F) : a_km_charsum(k_param, m, F);
            else
              value = m >= k_param ? a_km_stable(k_param, F) : a_km_bruteforce(k_param, m, F, jobs);
            rows.push_back({k_param, m, F.size(), value, method});
          } else {
            rows.push_back({k_param, m, F.size(), heisenberg_local_small_v(k_param, F, m, jobs)});
          }
        }
        if (table_kind == "akm")
          print_rows({"k", "m", "q", "a_km", "method"}, rows, format);
        else
          print_rows({"k", "m", "q", "local_count"}, rows, format);
      }
    } else if (*global_cmd) {
      auto [p, d] = field.resolve(0);
      LieAlgebra algebra = load_algebra(algebra_source, field.p);
      if (field.p == 0 && field.q == 0) p = algebra.p();
      if (p != algebra.p()) throw UserError("field and algebra have different characteristic");
      RationalSeries s = euler_product(algebra, d, parse_rational(nmax_text), jobs);
      std::vector<std::vector<json>> rows;
      for (std::size_t j = 0; j < s.coeffs.size(); ++j) {
        if (s.coeffs[j] == 0) continue;
        Rational N = s.exponent(j);
        rows.push_back({N.numerator(), N.denominator(), big_to_string(s.coeffs[j])});
      }
      print_rows({"N_num", "N_den", "a_N"}, rows, format);
    } else if (*asym_cmd) {
      AsymptoticsReport report;
      if (!heisenberg_pk.empty()) {
        auto pk = parse_int_list(heisenberg_pk);
        if (pk.size() != 2) throw UserError("--heisenberg takes p,k");
        report = heisenberg_constants(pk[0], pk[1]);
      } else if (!algebra_source.empty()) {
        report = torsion_growth_constants(load_algebra(algebra_source, field.p));
      } else {
        throw UserError("asymptotics needs --algebra or --heisenberg");
      }
      std::cout << report_to_json(report).dump() << "\n";
    }
  } catch (const UserError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
