#include "hp0/hp0.h"

#include <cstring>
#include <sstream>

#include "specfile.hpp"
#include "verify.hpp"

namespace h = ::hp0;

struct hp0_series {
  h::LaurentSlice slice;
};
struct hp0_surface {
  h::SurfaceSpec spec;
};
struct hp0_group {
  h::GroupActionSpec spec;
};
struct hp0_strata {
  h::StratumData data;
};

namespace {

thread_local std::string g_last_error;

hp0_status fail(hp0_status code, const std::string& msg) {
  g_last_error = msg;
  return code;
}

template <class Fn>
hp0_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const h::RefusalError& e) {
    return fail(HP0_REFUSED, e.what());
  } catch (const std::exception& e) {
    return fail(HP0_INVALID, e.what());
  }
}

hp0_series* wrap_series(const h::TruncatedSeries& s) {
  auto* out = new hp0_series;
  out->slice.start = 0;
  out->slice.coeffs = s.c;
  return out;
}

hp0_series* wrap_slice(h::LaurentSlice s) {
  auto* out = new hp0_series;
  out->slice = std::move(s);
  return out;
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string sweep_to_text(const h::SweepReport& rep, bool structured) {
  std::ostringstream os;
  auto status_name = [](h::SweepRow::Status s) {
    switch (s) {
      case h::SweepRow::Status::Match: return "match";
      case h::SweepRow::Status::Mismatch: return "mismatch";
      default: return "refused";
    }
  };
  if (structured) {
    os << "{\"spec\":\"" << rep.id << "\",\"surface_threshold\":" << rep.thresholds.surface_threshold;
    if (rep.thresholds.kleinian_h) os << ",\"coxeter_h\":" << *rep.thresholds.kleinian_h;
    if (rep.thresholds.top_degree_threshold) os << ",\"top_degree_threshold\":" << *rep.thresholds.top_degree_threshold;
    os << "}\n";
    for (const auto& row : rep.rows) {
      os << "{\"p\":" << row.p << ",\"N\":" << row.N << ",\"status\":\""
         << status_name(row.status) << "\"";
      if (row.mismatch) os << ",\"first_mismatch\":" << *row.mismatch;
      if (!row.reason.empty()) {
        std::string esc;
        for (char c : row.reason) {
          if (c == '"' || c == '\\') esc += '\\';
          esc += c;
        }
        os << ",\"reason\":\"" << esc << "\"";
      }
      os << "}\n";
    }
  } else {
    os << "# spec=" << rep.id << " surface_threshold=" << rep.thresholds.surface_threshold;
    if (rep.thresholds.kleinian_h) os << " coxeter_h=" << *rep.thresholds.kleinian_h;
    if (rep.thresholds.top_degree_threshold) os << " top_degree_threshold=" << *rep.thresholds.top_degree_threshold;
    os << "\n";
    os << "p\tN\tstatus\tfirst_mismatch\treason\n";
    for (const auto& row : rep.rows) {
      os << row.p << "\t" << row.N << "\t" << status_name(row.status) << "\t";
      if (row.mismatch)
        os << *row.mismatch;
      else
        os << "-";
      os << "\t" << (row.reason.empty() ? "-" : row.reason) << "\n";
    }
  }
  return os.str();
}

}  // namespace

extern "C" {

const char* hp0_last_error(void) { return g_last_error.c_str(); }

void hp0_string_free(char* s) { delete[] s; }

int64_t hp0_series_start(const hp0_series* s) { return s ? s->slice.start : 0; }
int64_t hp0_series_length(const hp0_series* s) {
  return s ? int64_t(s->slice.coeffs.size()) : 0;
}
int64_t hp0_series_coeff(const hp0_series* s, int64_t deg) {
  return s ? s->slice.at(deg) : 0;
}
void hp0_series_free(hp0_series* s) { delete s; }

hp0_status hp0_surface_from_json(const char* text, hp0_surface** out) {
  return guarded([&] {
    if (!text || !out) return fail(HP0_INVALID, "null argument");
    *out = new hp0_surface{h::parse_surface_json(text)};
    return HP0_OK;
  });
}

hp0_status hp0_surface_preset(const char* label, hp0_surface** out) {
  return guarded([&] {
    if (!label || !out) return fail(HP0_INVALID, "null argument");
    *out = new hp0_surface{h::ade_preset(label).surface};
    return HP0_OK;
  });
}

hp0_status hp0_surface_to_json(const hp0_surface* spec, char** out) {
  return guarded([&] {
    if (!spec || !out) return fail(HP0_INVALID, "null argument");
    *out = dup_string(h::dump_surface_json(spec->spec));
    return HP0_OK;
  });
}

hp0_status hp0_surface_validate(const hp0_surface* spec) {
  return guarded([&] {
    if (!spec) return fail(HP0_INVALID, "null argument");
    h::certify_isolated(spec->spec);
    return HP0_OK;
  });
}

int64_t hp0_surface_degree(const hp0_surface* spec) { return spec ? spec->spec.d : 0; }

void hp0_surface_free(hp0_surface* spec) { delete spec; }

hp0_status hp0_surface_brute(const hp0_surface* spec, int64_t p, int64_t max_deg,
                             hp0_series** out) {
  return guarded([&] {
    if (!spec || !out) return fail(HP0_INVALID, "null argument");
    int64_t N = max_deg > 0 ? max_deg : h::default_surface_depth(spec->spec, p);
    *out = wrap_series(h::hp0_series(spec->spec, p, N));
    return HP0_OK;
  });
}

hp0_status hp0_surface_formula(const hp0_surface* spec, int64_t p, int64_t max_deg,
                                hp0_series** out) {
  return guarded([&] {
    if (!spec || !out) return fail(HP0_INVALID, "null argument");
    int64_t N = max_deg > 0 ? max_deg : h::default_surface_depth(spec->spec, p);
    *out = wrap_series(h::surface_formula_series(spec->spec.weights, spec->spec.d, p, N));
    return HP0_OK;
  });
}

hp0_status hp0_kleinian_formula(const char* label, int64_t p, int64_t max_deg,
                                hp0_series** out) {
  return guarded([&] {
    if (!label || !out) return fail(HP0_INVALID, "null argument");
    h::ADEPreset preset = h::ade_preset(label);
    int64_t N = max_deg > 0 ? max_deg : h::default_surface_depth(preset.surface, p);
    *out = wrap_series(h::kleinian_series(preset, p, N));
    return HP0_OK;
  });
}

hp0_status hp0_curve_formula(int64_t d, int64_t p, int64_t max_deg, hp0_series** out) {
  return guarded([&] {
    if (!out) return fail(HP0_INVALID, "null argument");
    *out = wrap_series(h::plane_curve_series(h::plane_curve(d), p, max_deg));
    return HP0_OK;
  });
}

hp0_status hp0_typea_oracle(int64_t n, int64_t p, int64_t max_deg, hp0_series** out) {
  return guarded([&] {
    if (!out) return fail(HP0_INVALID, "null argument");
    *out = wrap_series(h::typeA_oracle(n, p, max_deg));
    return HP0_OK;
  });
}

hp0_status hp0_group_from_json(const char* text, hp0_group** out) {
  return guarded([&] {
    if (!text || !out) return fail(HP0_INVALID, "null argument");
    *out = new hp0_group{h::parse_group_json(text)};
    return HP0_OK;
  });
}

hp0_status hp0_group_to_json(const hp0_group* g, char** out) {
  return guarded([&] {
    if (!g || !out) return fail(HP0_INVALID, "null argument");
    *out = dup_string(h::dump_group_json(g->spec));
    return HP0_OK;
  });
}

hp0_status hp0_group_builtin(const char* label, hp0_group** out) {
  return guarded([&] {
    if (!label || !out) return fail(HP0_INVALID, "null argument");
    std::string s(label);
    if (s == "trivial") {
      *out = new hp0_group{h::trivial_group_dim2()};
    } else if (s == "S2") {
      *out = new hp0_group{h::s2_swap_group_dim4()};
    } else if (s.size() >= 2 && s[0] == 'Z') {
      *out = new hp0_group{h::cyclic_sl2_group(std::stoll(s.substr(1)))};
    } else {
      return fail(HP0_INVALID, "unknown builtin group label: " + s);
    }
    return HP0_OK;
  });
}

hp0_status hp0_group_order(const hp0_group* g, int64_t p, int64_t* out) {
  return guarded([&] {
    if (!g || !out) return fail(HP0_INVALID, "null argument");
    *out = int64_t(h::close_group(g->spec, p).order());
    return HP0_OK;
  });
}

void hp0_group_free(hp0_group* g) { delete g; }

hp0_status hp0_quotient_brute(const hp0_group* g, int64_t p, int64_t max_deg,
                              hp0_series** out) {
  return guarded([&] {
    if (!g || !out) return fail(HP0_INVALID, "null argument");
    *out = wrap_series(h::hp0_dims_quotient(g->spec, p, max_deg));
    return HP0_OK;
  });
}

hp0_status hp0_quotient_brute_b(const hp0_group* g, int64_t p, int64_t max_deg,
                                hp0_series** out) {
  return guarded([&] {
    if (!g || !out) return fail(HP0_INVALID, "null argument");
    *out = wrap_series(h::hp0_B_mod_AB(g->spec, p, max_deg));
    return HP0_OK;
  });
}

hp0_status hp0_strata_from_json(const char* text, hp0_strata** out) {
  return guarded([&] {
    if (!text || !out) return fail(HP0_INVALID, "null argument");
    *out = new hp0_strata{h::parse_strata_json(text)};
    return HP0_OK;
  });
}

hp0_status hp0_strata_kleinian(const char* label, hp0_strata** out) {
  return guarded([&] {
    if (!label || !out) return fail(HP0_INVALID, "null argument");
    *out = new hp0_strata{h::kleinian_strata(h::ade_preset(label))};
    return HP0_OK;
  });
}

hp0_status hp0_strata_to_json(const hp0_strata* s, char** out) {
  return guarded([&] {
    if (!s || !out) return fail(HP0_INVALID, "null argument");
    *out = dup_string(h::dump_strata_json(s->data));
    return HP0_OK;
  });
}

void hp0_strata_free(hp0_strata* s) { delete s; }

hp0_status hp0_quotient_formula(const hp0_strata* s, int64_t p, int64_t max_deg,
                                hp0_series** out) {
  return guarded([&] {
    if (!s || !out) return fail(HP0_INVALID, "null argument");
    *out = wrap_series(h::quotient_series(s->data, p, max_deg));
    return HP0_OK;
  });
}

hp0_status hp0_sympower_formula(int64_t half_dim, int64_t n, int64_t p, int64_t max_deg,
                                hp0_series** out) {
  return guarded([&] {
    if (!out) return fail(HP0_INVALID, "null argument");
    *out = wrap_series(h::sympower_series(half_dim, n, p, max_deg));
    return HP0_OK;
  });
}

hp0_status hp0_sym_kleinian_formula(const char* label, int64_t n, int64_t p,
                                    int64_t max_deg, hp0_series** out) {
  return guarded([&] {
    if (!label || !out) return fail(HP0_INVALID, "null argument");
    *out = wrap_series(h::sym_kleinian_series(h::ade_preset(label), n, p, max_deg));
    return HP0_OK;
  });
}

hp0_status hp0_series_op(const char* op, const int64_t* weights, int64_t d, int64_t lo,
                         int64_t hi, hp0_series** out) {
  return guarded([&] {
    if (!op || !weights || !out) return fail(HP0_INVALID, "null argument");
    h::WeightSystem w({weights[0], weights[1], weights[2]});
    std::string name(op);
    if (name == "hilb") {
      *out = wrap_slice(h::expand(h::hilbert_rational(w, d), lo, hi));
    } else if (name == "f") {
      if (lo < 1) return fail(HP0_INVALID, "f coefficients start at k = 1");
      h::LaurentSlice full = h::f_series(w, d, hi);
      h::LaurentSlice window;
      window.start = lo;
      for (int64_t k = lo; k <= hi; ++k) window.coeffs.push_back(full.at(k));
      *out = wrap_slice(std::move(window));
    } else if (name == "u") {
      *out = wrap_slice(h::u_coefficients(w, d, lo, hi));
    } else if (name == "s") {
      if (lo < 1) return fail(HP0_INVALID, "s coefficients start at k = 1");
      h::LaurentSlice full = h::s_coefficients(w, d, hi);
      h::LaurentSlice window;
      window.start = lo;
      for (int64_t k = lo; k <= hi; ++k) window.coeffs.push_back(full.at(k));
      *out = wrap_slice(std::move(window));
    } else {
      return fail(HP0_INVALID, "unknown series op: " + name);
    }
    return HP0_OK;
  });
}

hp0_status hp0_compare_surface(const hp0_surface* spec, int64_t p, int64_t max_deg,
                               hp0_series** brute, hp0_series** formula,
                               int64_t* first_mismatch) {
  return guarded([&] {
    if (!spec) return fail(HP0_INVALID, "null argument");
    std::optional<int64_t> depth;
    if (max_deg > 0) depth = max_deg;
    h::ComparisonReport rep = h::compare_surface(spec->spec, p, depth);
    if (rep.refused) return fail(HP0_REFUSED, rep.refusal_reason);
    if (brute) *brute = wrap_series(rep.brute);
    if (formula) *formula = wrap_series(rep.formula);
    if (first_mismatch) *first_mismatch = rep.mismatch ? *rep.mismatch : -1;
    return rep.matched() ? HP0_OK : fail(HP0_MISMATCH, "series differ");
  });
}

hp0_status hp0_cross_oracles(int64_t n, int64_t p, int64_t max_deg, hp0_series** brute,
                             int64_t* first_mismatch) {
  return guarded([&] {
    std::optional<int64_t> depth;
    if (max_deg > 0) depth = max_deg;
    h::CrossOracleReport rep = h::cross_oracles(n, p, depth);
    if (brute) *brute = wrap_series(rep.brute);
    if (first_mismatch) *first_mismatch = rep.mismatch ? *rep.mismatch : -1;
    return rep.matched() ? HP0_OK : fail(HP0_MISMATCH, "oracles disagree");
  });
}

hp0_status hp0_sweep_surface(const hp0_surface* spec, const int64_t* primes,
                             int64_t nprimes, int64_t max_deg, int64_t kleinian_h,
                             int64_t max_degree_D, int structured, char** report) {
  return guarded([&] {
    if (!spec || !primes || !report) return fail(HP0_INVALID, "null argument");
    std::vector<int64_t> ps(primes, primes + nprimes);
    std::optional<int64_t> depth;
    if (max_deg > 0) depth = max_deg;
    std::optional<int64_t> hh;
    if (kleinian_h > 0) hh = kleinian_h;
    std::optional<int64_t> D;
    if (max_degree_D > 0) D = max_degree_D;
    h::SweepReport rep = h::sweep_surface(spec->spec, ps, depth, hh, D);
    *report = dup_string(sweep_to_text(rep, structured != 0));
    return rep.all_matched_above(rep.thresholds.surface_threshold)
               ? HP0_OK
               : fail(HP0_MISMATCH, "a prime above the threshold did not match");
  });
}

hp0_status hp0_run_acceptance(char** report) {
  return guarded([&] {
    if (!report) return fail(HP0_INVALID, "null argument");
    std::ostringstream os;
    auto results = h::run_acceptance(&os);
    bool all = true;
    for (const auto& r : results) all = all && r.passed;
    os << (all ? "ACCEPTANCE: all criteria passed\n" : "ACCEPTANCE: FAILURES present\n");
    *report = dup_string(os.str());
    return all ? HP0_OK : fail(HP0_MISMATCH, "acceptance criteria failed");
  });
}

}  // extern "C"
