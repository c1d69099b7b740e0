#include "spschub/spschub.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <functional>
#include <new>
#include <sstream>

#include "serialize.hpp"
#include "spschub/arakelov.hpp"
#include "spschub/error.hpp"
#include "spschub/expr.hpp"
#include "spschub/symplectic.hpp"
#include "spschub/table.hpp"

struct spschub_context {
  int calls = 0;
};

namespace {

using spschub::io::json;

thread_local std::string last_error;

struct Result {
  spschub_status status = SPSCHUB_OK;
  std::string text;
};

spschub_status status_of(spschub::ErrorCode code) {
  switch (code) {
    case spschub::ErrorCode::InvalidArgument:
      return SPSCHUB_INVALID_ARGUMENT;
    case spschub::ErrorCode::Parse:
      return SPSCHUB_PARSE;
    case spschub::ErrorCode::Unsupported:
      return SPSCHUB_UNSUPPORTED;
    case spschub::ErrorCode::Internal:
      return SPSCHUB_INTERNAL;
  }
  return SPSCHUB_INTERNAL;
}

char* copy_out(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

spschub_status run(spschub_context* ctx, char** out, const std::function<Result()>& body) {
  last_error.clear();
  if (out) *out = nullptr;
  if (!ctx || !out) {
    last_error = "null context or output pointer";
    return SPSCHUB_INVALID_ARGUMENT;
  }
  ++ctx->calls;
  try {
    Result r = body();
    *out = copy_out(r.text);
    if (r.status != SPSCHUB_OK) last_error = "table mismatch";
    return r.status;
  } catch (const spschub::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const json::exception& e) {
    last_error = std::string("malformed JSON: ") + e.what();
    return SPSCHUB_PARSE;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return SPSCHUB_INTERNAL;
  } catch (const std::exception& e) {
    last_error = std::string("internal error: ") + e.what();
    return SPSCHUB_INTERNAL;
  }
}

std::string need(const char* s, const char* what) {
  if (!s) spschub::fail(spschub::ErrorCode::InvalidArgument, std::string(what) + " is null");
  return s;
}

void check_rank(int n) {
  spschub::require(n >= 1 && n <= spschub::kMaxRank,
                   "rank must be in 1.." + std::to_string(spschub::kMaxRank));
}

std::string word_digits(const spschub::Word& word) {
  std::ostringstream os;
  for (std::size_t i = 0; i < word.size(); ++i) os << (i ? " " : "") << word[i];
  return os.str();
}

std::string render(spschub_format format, const json& j, const std::string& text) {
  if (format == SPSCHUB_JSON) return j.dump(1) + "\n";
  return text + "\n";
}

void check_format(spschub_format format) {
  spschub::require(format == SPSCHUB_TEXT || format == SPSCHUB_JSON, "unknown output format");
}

}  // namespace

extern "C" {

spschub_status spschub_context_new(spschub_context** out) {
  last_error.clear();
  if (!out) {
    last_error = "null output pointer";
    return SPSCHUB_INVALID_ARGUMENT;
  }
  *out = new (std::nothrow) spschub_context();
  if (!*out) {
    last_error = "out of memory";
    return SPSCHUB_INTERNAL;
  }
  return SPSCHUB_OK;
}

void spschub_context_free(spschub_context* ctx) { delete ctx; }

const char* spschub_version(void) { return "1.0.0"; }

const char* spschub_status_name(spschub_status status) {
  switch (status) {
    case SPSCHUB_OK:
      return "ok";
    case SPSCHUB_INVALID_ARGUMENT:
      return "invalid_argument";
    case SPSCHUB_PARSE:
      return "parse";
    case SPSCHUB_UNSUPPORTED:
      return "unsupported";
    case SPSCHUB_INTERNAL:
      return "internal";
    case SPSCHUB_MISMATCH:
      return "mismatch";
  }
  return "unknown";
}

const char* spschub_last_error(void) { return last_error.c_str(); }

void spschub_string_free(char* s) { std::free(s); }

spschub_status spschub_parse_poly(spschub_context* ctx, int n, const char* expr,
                                  spschub_format format, char** out) {
  return run(ctx, out, [&] {
    check_format(format);
    check_rank(n);
    const auto f = spschub::parse_poly(need(expr, "expression"), n);
    json j = {{"n", n}, {"text", f.to_string()}, {"poly", spschub::io::to_json(f)}};
    return Result{SPSCHUB_OK, render(format, j, f.to_string())};
  });
}

spschub_status spschub_schubert(spschub_context* ctx, int n, const char* w, spschub_format format,
                                char** out) {
  return run(ctx, out, [&] {
    check_format(format);
    check_rank(n);
    const auto perm = spschub::SignedPermutation::parse(need(w, "w"), n);
    const auto f = spschub::schubert_c(perm);
    json j = {{"n", n},
              {"w", spschub::io::to_json(perm)},
              {"word", word_digits(spschub::first_reduced_word(perm))},
              {"length", spschub::length(perm)},
              {"text", f.to_string()},
              {"poly", spschub::io::to_json(f)}};
    return Result{SPSCHUB_OK, render(format, j, f.to_string())};
  });
}

spschub_status spschub_table(spschub_context* ctx, int n, spschub_format format, char** out) {
  return run(ctx, out, [&] {
    check_format(format);
    spschub::require(n >= 1 && n <= 4, "table rank must be in 1..4");
    const auto rows = spschub::schubert_table(n);
    std::ostringstream text;
    json jrows = json::array();
    for (const auto& row : rows) {
      text << spschub::word_to_string(row.word) << " | " << row.w.to_string() << " | "
           << row.poly.to_string() << "\n";
      json terms = json::array();
      for (const auto& t : row.terms)
        terms.push_back({{"lambda", spschub::io::to_json(t.lambda)},
                         {"pi", spschub::io::to_json(t.pi)},
                         {"coeff", t.coeff.get_si()}});
      jrows.push_back({{"w", spschub::io::to_json(row.w)},
                       {"word", word_digits(row.word)},
                       {"length", static_cast<int>(row.word.size())},
                       {"terms", terms},
                       {"text", row.poly.to_string()}});
    }
    if (format == SPSCHUB_JSON) return Result{SPSCHUB_OK, json{{"n", n}, {"rows", jrows}}.dump(1) + "\n"};
    return Result{SPSCHUB_OK, text.str()};
  });
}

spschub_status spschub_table_check(spschub_context* ctx, const char* fixture_path,
                                   spschub_format format, char** out) {
  return run(ctx, out, [&] {
    check_format(format);
    const std::string path = need(fixture_path, "fixture path");
    std::ifstream in(path);
    if (!in) spschub::fail(spschub::ErrorCode::InvalidArgument, "cannot open fixture '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    const auto check = spschub::check_table(buffer.str());
    std::ostringstream text;
    text << check.rows << " rows checked, " << check.mismatches.size() << " mismatches";
    for (const auto& m : check.mismatches) text << "\n  " << m;
    json j = {{"fixture", path}, {"rows", check.rows}, {"ok", check.ok()},
              {"mismatches", check.mismatches}};
    return Result{check.ok() ? SPSCHUB_OK : SPSCHUB_MISMATCH, render(format, j, text.str())};
  });
}

spschub_status spschub_multiply(spschub_context* ctx, int n, const char* u, const char* v,
                                spschub_format format, char** out) {
  return run(ctx, out, [&] {
    check_format(format);
    check_rank(n);
    const auto pu = spschub::SignedPermutation::parse(need(u, "u"), n);
    const auto pv = spschub::SignedPermutation::parse(need(v, "v"), n);
    const auto e = spschub::structure_constants(pu, pv);
    const std::string s = spschub::io::expansion_to_string(e);
    json j = {{"n", n},
              {"u", spschub::io::to_json(pu)},
              {"v", spschub::io::to_json(pv)},
              {"text", s},
              {"expansion", spschub::io::to_json(e)}};
    return Result{SPSCHUB_OK, render(format, j, s)};
  });
}

spschub_status spschub_expand(spschub_context* ctx, int n, const char* expr, int check_ideal,
                              spschub_format format, char** out) {
  return run(ctx, out, [&] {
    check_format(format);
    check_rank(n);
    const auto f = spschub::parse_poly(need(expr, "expression"), n);
    const auto e = spschub::expand(f);
    std::string s = spschub::io::expansion_to_string(e);
    json j = {{"n", n}, {"text", s}, {"expansion", spschub::io::to_json(e)}};
    if (check_ideal) {
      const auto m = spschub::ideal_membership(f);
      j["member"] = m.member;
      s = std::string(m.member ? "in ideal: yes" : "in ideal: no") + "\n" + s;
    }
    return Result{SPSCHUB_OK, render(format, j, s)};
  });
}

spschub_status spschub_arith_monomial(spschub_context* ctx, const int* exponents, size_t count,
                                      spschub_format format, char** out) {
  return run(ctx, out, [&] {
    check_format(format);
    spschub::require(exponents != nullptr && count >= 1 && count <= spschub::kMaxFormRank,
                     "need between 1 and " + std::to_string(spschub::kMaxFormRank) + " exponents");
    const std::vector<int> k(exponents, exponents + count);
    const int n = static_cast<int>(count);
    spschub::Monomial mono;
    for (int i = 0; i < n; ++i) {
      spschub::require(k[i] >= 0 && k[i] <= 255, "exponents must be in 0..255");
      mono[i] = static_cast<std::uint8_t>(k[i]);
    }
    spschub::require(mono.degree() == n * n + 1,
                     "exponents must sum to n^2+1 = " + std::to_string(n * n + 1));
    const auto cls = spschub::arith_class(spschub::MultiPoly::monomial(n, mono));
    const auto deg = spschub::arith_degree(cls);
    const std::string r = spschub::to_string(deg.omega_coefficient);
    const std::string d = spschub::to_string(deg.degree);
    json j = {{"n", n},        {"exponents", k},  {"omega_coefficient", r},
              {"degree", d},   {"class", spschub::io::to_json(cls)}};
    return Result{SPSCHUB_OK, render(format, j, "r = " + r + "\ndegree = " + d)};
  });
}

spschub_status spschub_height(spschub_context* ctx, int n, spschub_format format, char** out) {
  return run(ctx, out, [&] {
    check_format(format);
    const auto h = spschub::faltings_height(n);
    const std::string r = spschub::to_string(h.omega_coefficient);
    const std::string d = spschub::to_string(h.degree);
    json j = {{"n", n}, {"omega_coefficient", r}, {"height", d}};
    return Result{SPSCHUB_OK, render(format, j, d)};
  });
}

}  // extern "C"
