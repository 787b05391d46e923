#include "rm3/rm3.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include <json.hpp>

#include "rm3/errors.hpp"
#include "rm3/experiment.hpp"
#include "rm3/generators.hpp"
#include "rm3/homology.hpp"
#include "rm3/matrix_io.hpp"
#include "rm3/prescribe.hpp"

struct rm3_matrix {
  rm3::IntMatrix value;
};

struct rm3_family {
  rm3::GeneratorFamily value;
};

namespace {

thread_local std::string g_last_error;

rm3_status fail(rm3_status code, const char* what) {
  g_last_error = what;
  return code;
}

// Maps exceptions thrown by the core onto status codes.
template <class Fn>
rm3_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    fn();
    return RM3_OK;
  } catch (const rm3::ConfigError& e) {
    return fail(RM3_ERR_CONFIG, e.what());
  } catch (const rm3::IoError& e) {
    return fail(RM3_ERR_IO, e.what());
  } catch (const rm3::InvariantError& e) {
    return fail(RM3_ERR_INTERNAL, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(RM3_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::domain_error& e) {
    return fail(RM3_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(RM3_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(RM3_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(RM3_ERR_INTERNAL, "unknown error");
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(const void* p, const char* what) {
  if (!p) throw std::invalid_argument(std::string(what) + " must not be NULL");
}

std::string homology_json(const rm3::HomologyDescriptor& h) {
  nlohmann::json torsion = nlohmann::json::array();
  for (const auto& t : h.torsion) torsion.push_back(t.get_str());
  return nlohmann::json{{"betti", h.betti}, {"torsion", torsion},
                        {"torsion_order", h.torsion_order.get_str()}}
      .dump();
}

}  // namespace

extern "C" {

const char* rm3_version(void) { return rm3::experiment::kArtifactVersion; }

const char* rm3_last_error(void) { return g_last_error.c_str(); }

void rm3_string_free(char* s) { std::free(s); }

rm3_status rm3_matrix_parse(const char* text, rm3_matrix** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new rm3_matrix{rm3::parse_matrix(text)};
  });
}

rm3_status rm3_matrix_read_file(const char* path, rm3_matrix** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    auto ms = rm3::read_matrix_file(path);
    if (ms.size() != 1) throw std::invalid_argument("file must hold exactly one matrix");
    *out = new rm3_matrix{std::move(ms.front())};
  });
}

rm3_status rm3_matrix_from_int64(size_t dim, const int64_t* entries, rm3_matrix** out) {
  return guarded([&] {
    require(entries, "entries");
    require(out, "out");
    if (dim == 0) throw std::invalid_argument("dimension must be positive");
    rm3::IntMatrix m(dim);
    for (size_t i = 0; i < dim; ++i)
      for (size_t j = 0; j < dim; ++j) m(i, j) = rm3::Integer(std::to_string(entries[i * dim + j]));
    *out = new rm3_matrix{std::move(m)};
  });
}

void rm3_matrix_free(rm3_matrix* m) { delete m; }

size_t rm3_matrix_dim(const rm3_matrix* m) { return m ? m->value.dim() : 0; }

rm3_status rm3_matrix_entry(const rm3_matrix* m, size_t row, size_t col, char** out) {
  return guarded([&] {
    require(m, "matrix");
    require(out, "out");
    if (row >= m->value.dim() || col >= m->value.dim()) throw std::invalid_argument("index out of range");
    *out = dup_string(m->value(row, col).get_str());
  });
}

rm3_status rm3_matrix_to_string(const rm3_matrix* m, char** out) {
  return guarded([&] {
    require(m, "matrix");
    require(out, "out");
    *out = dup_string(rm3::format_matrix(m->value));
  });
}

rm3_status rm3_matrix_mul(const rm3_matrix* a, const rm3_matrix* b, rm3_matrix** out) {
  return guarded([&] {
    require(a, "a");
    require(b, "b");
    require(out, "out");
    *out = new rm3_matrix{rm3::mat_mul(a->value, b->value)};
  });
}

rm3_status rm3_matrix_det(const rm3_matrix* m, char** out) {
  return guarded([&] {
    require(m, "matrix");
    require(out, "out");
    *out = dup_string(rm3::det(m->value).get_str());
  });
}

rm3_status rm3_matrix_is_symplectic(const rm3_matrix* m, int* out) {
  return guarded([&] {
    require(m, "matrix");
    require(out, "out");
    *out = rm3::is_symplectic(m->value) ? 1 : 0;
  });
}

rm3_status rm3_smith_normal_form(const rm3_matrix* m, char** json_out) {
  return guarded([&] {
    require(m, "matrix");
    require(json_out, "json_out");
    nlohmann::json d = nlohmann::json::array();
    for (const auto& x : rm3::smith_normal_form(m->value).divisors) d.push_back(x.get_str());
    *json_out = dup_string(d.dump());
  });
}

rm3_status rm3_mapping_torus_homology(const rm3_matrix* m, char** json_out) {
  return guarded([&] {
    require(m, "matrix");
    require(json_out, "json_out");
    *json_out = dup_string(homology_json(rm3::mapping_torus_homology(m->value)));
  });
}

rm3_status rm3_heegaard_homology(const rm3_matrix* m, char** json_out) {
  return guarded([&] {
    require(m, "matrix");
    require(json_out, "json_out");
    *json_out = dup_string(homology_json(rm3::heegaard_homology(m->value, m->value.dim() / 2)));
  });
}

rm3_status rm3_fp_rank(const rm3_matrix* m, uint64_t p, size_t* out) {
  return guarded([&] {
    require(m, "matrix");
    require(out, "out");
    *out = rm3::fp_rank(m->value, p);
  });
}

rm3_status rm3_prescribe(const char* chain, rm3_matrix** out) {
  return guarded([&] {
    require(chain, "chain");
    require(out, "out");
    *out = new rm3_matrix{rm3::prescribe_symplectic(rm3::parse_chain(chain))};
  });
}

rm3_status rm3_verify_prescription(const rm3_matrix* m, const char* chain, int* out) {
  return guarded([&] {
    require(m, "matrix");
    require(chain, "chain");
    require(out, "out");
    *out = rm3::verify_prescription(m->value, rm3::parse_chain(chain)) ? 1 : 0;
  });
}

rm3_status rm3_family_create(const char* name, size_t parameter, rm3_family** out) {
  return guarded([&] {
    require(name, "name");
    require(out, "out");
    const auto fname = rm3::family_name_from_string(name);
    if (fname == rm3::FamilyName::custom)
      throw std::invalid_argument("custom families are built from matrix files via experiments");
    *out = new rm3_family{rm3::make_family(rm3::FamilySpec{fname, parameter, {}})};
  });
}

void rm3_family_free(rm3_family* f) { delete f; }

size_t rm3_family_size(const rm3_family* f) { return f ? f->value.size() : 0; }

rm3_status rm3_family_get(const rm3_family* f, size_t index, rm3_matrix** out) {
  return guarded([&] {
    require(f, "family");
    require(out, "out");
    if (index >= f->value.size()) throw std::invalid_argument("index out of range");
    *out = new rm3_matrix{f->value[index]};
  });
}

rm3_status rm3_run_experiment(const char* config_json, const char* out_prefix,
                              char** manifest_out, char** csv_out) {
  return guarded([&] {
    require(config_json, "config_json");
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(config_json);
    } catch (const nlohmann::json::exception& e) {
      throw rm3::ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    const auto cfg = rm3::experiment::config_from_json(doc);
    const auto result = rm3::experiment::run_experiment(cfg);
    if (out_prefix) rm3::experiment::write_outputs(result, out_prefix);
    if (manifest_out) *manifest_out = dup_string(result.manifest.dump(2));
    if (csv_out) *csv_out = dup_string(result.csv);
  });
}

}  // extern "C"
