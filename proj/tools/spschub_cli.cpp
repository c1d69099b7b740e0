// spschub: symplectic Schubert polynomials and arithmetic intersections on
// Sp(2n)/B from the command line.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "spschub/spschub.h"

namespace {

using Context = std::unique_ptr<spschub_context, decltype(&spschub_context_free)>;

int report_error(const std::string& status, const std::string& message) {
  nlohmann::ordered_json j = {{"error", {{"status", status}, {"message", message}}}};
  std::cerr << j.dump() << "\n";
  return 1;
}

// Prints the result of a C call and maps the status to an exit code.
int finish(spschub_status status, char*& out) {
  if (out) {
    std::fputs(out, stdout);
    spschub_string_free(out);
  }
  if (status == SPSCHUB_OK) return 0;
  if (status == SPSCHUB_MISMATCH) return 2;
  return report_error(spschub_status_name(status), spschub_last_error());
}

std::vector<int> parse_exponents(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw CLI::ValidationError("--mono", "expected comma-separated integers, got '" + text + "'");
    }
    if (used != item.size())
      throw CLI::ValidationError("--mono", "expected comma-separated integers, got '" + text + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symplectic Schubert calculus and arithmetic intersections on Sp(2n)/B"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(spschub_version()));

  bool json = false;
  app.add_flag("--json", json, "JSON output")->configurable(false);
  app.fallthrough();

  int n = 0;
  std::string w, u, v, poly, mono, fixture = SPSCHUB_DEFAULT_FIXTURE;
  bool check = false, ideal = false;

  auto* cw = app.add_subcommand("cw", "symplectic Schubert polynomial of w");
  cw->add_option("--n", n, "rank")->required();
  cw->add_option("--w", w, "signed permutation (\"-2 1 3\") or word (\"s1 s0\")")->required();

  auto* table = app.add_subcommand("table", "all symplectic Schubert polynomials of W_n");
  table->add_option("--n", n, "rank")->default_val(3);
  table->add_flag("--check", check, "compare with a fixture table");
  table->add_option("--fixture", fixture, "fixture JSON for --check")->capture_default_str();

  auto* mult = app.add_subcommand("mult", "expand the product of two Schubert polynomials");
  mult->add_option("--n", n, "rank")->required();
  mult->add_option("--u", u, "first element")->required();
  mult->add_option("--v", v, "second element")->required();

  auto* expand = app.add_subcommand("expand", "expand a polynomial in the combined basis");
  expand->add_option("--n", n, "rank")->required();
  expand->add_option("--poly", poly, "polynomial expression")->required();
  expand->add_flag("--ideal", ideal, "also decide membership in the ideal");

  auto* normal = app.add_subcommand("poly", "normalize a polynomial expression");
  normal->add_option("--n", n, "rank")->required();
  normal->add_option("--poly", poly, "polynomial expression")->required();

  auto* arakelov = app.add_subcommand("arakelov", "arithmetic degree of a monomial in the x_i");
  arakelov->add_option("--n", n, "rank")->required();
  arakelov->add_option("--mono", mono, "exponents k1,...,kn summing to n^2+1")->required();

  auto* height = app.add_subcommand("height", "height of Sp(2n)/B for O(1)");
  height->add_option("--n", n, "rank")->required();

  std::vector<int> exponents;
  try {
    app.parse(argc, argv);
    if (arakelov->parsed()) {
      exponents = parse_exponents(mono);
      if (static_cast<int>(exponents.size()) != n)
        throw CLI::ValidationError("--mono", "expected " + std::to_string(n) + " exponents");
    }
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return report_error("usage", e.what());
  }

  spschub_context* raw = nullptr;
  if (spschub_context_new(&raw) != SPSCHUB_OK) return report_error("internal", spschub_last_error());
  Context ctx(raw, &spschub_context_free);
  const spschub_format format = json ? SPSCHUB_JSON : SPSCHUB_TEXT;
  char* out = nullptr;

  spschub_status status = SPSCHUB_INTERNAL;
  if (cw->parsed())
    status = spschub_schubert(ctx.get(), n, w.c_str(), format, &out);
  else if (table->parsed() && check)
    status = spschub_table_check(ctx.get(), fixture.c_str(), format, &out);
  else if (table->parsed())
    status = spschub_table(ctx.get(), n, format, &out);
  else if (mult->parsed())
    status = spschub_multiply(ctx.get(), n, u.c_str(), v.c_str(), format, &out);
  else if (expand->parsed())
    status = spschub_expand(ctx.get(), n, poly.c_str(), ideal ? 1 : 0, format, &out);
  else if (normal->parsed())
    status = spschub_parse_poly(ctx.get(), n, poly.c_str(), format, &out);
  else if (arakelov->parsed())
    status = spschub_arith_monomial(ctx.get(), exponents.data(), exponents.size(), format, &out);
  else if (height->parsed())
    status = spschub_height(ctx.get(), n, format, &out);
  else
    return report_error("usage", "no subcommand");
  return finish(status, out);
}
