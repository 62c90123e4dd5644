#include "pbwlab/pbwlab.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "errors.hpp"
#include "genocchi.hpp"
#include "lie.hpp"
#include "polytopes.hpp"
#include "qpoly.hpp"
#include "quiver.hpp"
#include "tableaux.hpp"

struct pbwlab_point_set {
    int n;
    std::vector<pbwlab::MultiExponent> points;
};

struct pbwlab_poly {
    pbwlab::QPolynomial poly;
};

struct pbwlab_dellac_set {
    std::vector<pbwlab::DellacConfig> configs;
};

struct pbwlab_rep {
    pbwlab::QuiverRep rep;
};

namespace {

thread_local std::string g_last_error;

pbwlab_status map_code(pbwlab::Errc code) {
    switch (code) {
    case pbwlab::Errc::invalid_argument: return PBWLAB_ERROR_INVALID_ARGUMENT;
    case pbwlab::Errc::incompatible: return PBWLAB_ERROR_INCOMPATIBLE;
    case pbwlab::Errc::not_realizable: return PBWLAB_ERROR_NOT_REALIZABLE;
    case pbwlab::Errc::resource_limit: return PBWLAB_ERROR_RESOURCE_LIMIT;
    case pbwlab::Errc::invalid_field: return PBWLAB_ERROR_INVALID_FIELD;
    }
    return PBWLAB_ERROR_INTERNAL;
}

template <typename Body>
pbwlab_status guarded(Body&& body) {
    try {
        g_last_error.clear();
        body();
        return PBWLAB_OK;
    } catch (const pbwlab::Error& e) {
        g_last_error = e.what();
        return map_code(e.code());
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return PBWLAB_ERROR_INTERNAL;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return PBWLAB_ERROR_INTERNAL;
    }
}

pbwlab_status null_argument(const char* what) {
    g_last_error = std::string("null argument: ") + what;
    return PBWLAB_ERROR_NULL_ARGUMENT;
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out)
        throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

pbwlab::DominantWeight make_weight(int n, const int64_t* m, size_t m_len) {
    return pbwlab::DominantWeight(n, std::vector<std::int64_t>(m, m + m_len));
}

}  // namespace

extern "C" {

const char* pbwlab_version(void) {
    return "0.1.0";
}

const char* pbwlab_status_name(pbwlab_status status) {
    switch (status) {
    case PBWLAB_OK: return "ok";
    case PBWLAB_ERROR_INVALID_ARGUMENT: return "invalid-argument";
    case PBWLAB_ERROR_INCOMPATIBLE: return "incompatible";
    case PBWLAB_ERROR_NOT_REALIZABLE: return "not-realizable";
    case PBWLAB_ERROR_RESOURCE_LIMIT: return "resource-limit";
    case PBWLAB_ERROR_INVALID_FIELD: return "invalid-field";
    case PBWLAB_ERROR_NULL_ARGUMENT: return "null-argument";
    case PBWLAB_ERROR_INTERNAL: return "internal";
    }
    return "unknown";
}

const char* pbwlab_last_error_message(void) {
    return g_last_error.c_str();
}

void pbwlab_string_free(char* s) {
    std::free(s);
}

pbwlab_status pbwlab_weyl_dim(int n, const int64_t* m, size_t m_len, char** out) {
    if (!out || (!m && m_len > 0))
        return null_argument("weyl_dim");
    return guarded([&] { *out = dup_string(pbwlab::weyl_dim(make_weight(n, m, m_len)).str()); });
}

pbwlab_status pbwlab_gt_pattern_count(int n, const int64_t* m, size_t m_len, char** out) {
    if (!out || (!m && m_len > 0))
        return null_argument("gt_pattern_count");
    return guarded(
        [&] { *out = dup_string(pbwlab::gt_pattern_count(make_weight(n, m, m_len)).str()); });
}

pbwlab_status pbwlab_pbw_tableau_count(int n, const int64_t* m, size_t m_len, char** out) {
    if (!out || (!m && m_len > 0))
        return null_argument("pbw_tableau_count");
    return guarded([&] {
        const auto tableaux = pbwlab::enumerate_pbw_tableaux(make_weight(n, m, m_len));
        *out = dup_string(pbwlab::BigInt(tableaux.size()).str());
    });
}

pbwlab_status pbwlab_fflv_points(int n, const int64_t* m, size_t m_len,
                                 pbwlab_point_set** out) {
    if (!out || (!m && m_len > 0))
        return null_argument("fflv_points");
    return guarded([&] {
        auto points = pbwlab::fflv_lattice_points(make_weight(n, m, m_len));
        *out = new pbwlab_point_set{n, std::move(points)};
    });
}

void pbwlab_point_set_free(pbwlab_point_set* set) {
    delete set;
}

int pbwlab_point_set_rank(const pbwlab_point_set* set) {
    return set ? set->n : -1;
}

int64_t pbwlab_point_set_size(const pbwlab_point_set* set) {
    return set ? static_cast<int64_t>(set->points.size()) : -1;
}

pbwlab_status pbwlab_point_set_coords(const pbwlab_point_set* set, size_t index,
                                      int64_t* out, size_t out_len) {
    if (!set || !out)
        return null_argument("point_set_coords");
    return guarded([&] {
        if (index >= set->points.size())
            pbwlab::fail(pbwlab::Errc::invalid_argument, "point index out of range");
        const auto& values = set->points[index].values();
        if (out_len != values.size())
            pbwlab::fail(pbwlab::Errc::invalid_argument, "coordinate buffer has wrong length");
        std::memcpy(out, values.data(), values.size() * sizeof(int64_t));
    });
}

pbwlab_status pbwlab_point_set_minkowski(const pbwlab_point_set* a,
                                         const pbwlab_point_set* b,
                                         pbwlab_point_set** out) {
    if (!a || !b || !out)
        return null_argument("point_set_minkowski");
    return guarded([&] {
        if (a->n != b->n)
            pbwlab::fail(pbwlab::Errc::incompatible, "point sets of different rank");
        auto points = pbwlab::minkowski_sum(a->points, b->points);
        *out = new pbwlab_point_set{a->n, std::move(points)};
    });
}

int pbwlab_point_set_equal(const pbwlab_point_set* a, const pbwlab_point_set* b) {
    if (!a || !b || a->n != b->n)
        return -1;
    return a->points == b->points ? 1 : 0;
}

pbwlab_status pbwlab_genocchi_number(int n, char** out) {
    if (!out)
        return null_argument("genocchi_number");
    return guarded([&] { *out = dup_string(pbwlab::genocchi_closed(n).str()); });
}

pbwlab_status pbwlab_genocchi_poly(int n, pbwlab_genocchi_formula formula,
                                   pbwlab_poly** out) {
    if (!out)
        return null_argument("genocchi_poly");
    return guarded([&] {
        pbwlab::QPolynomial poly;
        switch (formula) {
        case PBWLAB_GENOCCHI_DELLAC:
            poly = pbwlab::genocchi_poly_dellac(n);
            break;
        case PBWLAB_GENOCCHI_FERMIONIC:
            poly = pbwlab::genocchi_poly_fermionic(n);
            break;
        default:
            pbwlab::fail(pbwlab::Errc::invalid_argument, "unknown formula selector");
        }
        *out = new pbwlab_poly{std::move(poly)};
    });
}

pbwlab_status pbwlab_q_binomial(int64_t m, int64_t k, pbwlab_poly** out) {
    if (!out)
        return null_argument("q_binomial");
    return guarded([&] { *out = new pbwlab_poly{pbwlab::q_binomial(m, k)}; });
}

void pbwlab_poly_free(pbwlab_poly* poly) {
    delete poly;
}

int64_t pbwlab_poly_degree(const pbwlab_poly* poly) {
    return poly ? poly->poly.degree() : -2;
}

pbwlab_status pbwlab_poly_coeff(const pbwlab_poly* poly, size_t power, char** out) {
    if (!poly || !out)
        return null_argument("poly_coeff");
    return guarded([&] { *out = dup_string(poly->poly.coeff(power).str()); });
}

int pbwlab_poly_equal(const pbwlab_poly* a, const pbwlab_poly* b) {
    if (!a || !b)
        return -1;
    return a->poly == b->poly ? 1 : 0;
}

pbwlab_status pbwlab_poly_eval(const pbwlab_poly* poly, int64_t q, char** out) {
    if (!poly || !out)
        return null_argument("poly_eval");
    return guarded([&] { *out = dup_string(poly->poly.eval(pbwlab::BigInt(q)).str()); });
}

pbwlab_status pbwlab_flag_collection_count(int n, char** out) {
    if (!out)
        return null_argument("flag_collection_count");
    return guarded([&] {
        const auto collections = pbwlab::admissible_flag_collections(n);
        *out = dup_string(pbwlab::BigInt(collections.size()).str());
    });
}

pbwlab_status pbwlab_dellac_configs(int n, pbwlab_dellac_set** out) {
    if (!out)
        return null_argument("dellac_configs");
    return guarded([&] { *out = new pbwlab_dellac_set{pbwlab::dellac_configs(n)}; });
}

void pbwlab_dellac_set_free(pbwlab_dellac_set* set) {
    delete set;
}

int64_t pbwlab_dellac_set_size(const pbwlab_dellac_set* set) {
    return set ? static_cast<int64_t>(set->configs.size()) : -1;
}

pbwlab_status pbwlab_dellac_boxes(const pbwlab_dellac_set* set, size_t index,
                                  int64_t* columns, int64_t* rows, size_t len) {
    if (!set || !columns || !rows)
        return null_argument("dellac_boxes");
    return guarded([&] {
        if (index >= set->configs.size())
            pbwlab::fail(pbwlab::Errc::invalid_argument, "configuration index out of range");
        const auto& boxes = set->configs[index].boxes;
        if (len != boxes.size())
            pbwlab::fail(pbwlab::Errc::invalid_argument, "box buffer has wrong length");
        for (size_t b = 0; b < boxes.size(); ++b) {
            columns[b] = boxes[b].first;
            rows[b] = boxes[b].second;
        }
    });
}

int64_t pbwlab_dellac_length(const pbwlab_dellac_set* set, size_t index) {
    if (!set || index >= set->configs.size())
        return -1;
    return pbwlab::dellac_length(set->configs[index]);
}

pbwlab_status pbwlab_rep_special(int n, pbwlab_special_module kind, pbwlab_rep** out) {
    if (!out)
        return null_argument("rep_special");
    return guarded([&] {
        pbwlab::SpecialKind which;
        switch (kind) {
        case PBWLAB_MODULE_M0: which = pbwlab::SpecialKind::M0; break;
        case PBWLAB_MODULE_M1: which = pbwlab::SpecialKind::M1; break;
        case PBWLAB_MODULE_M2: which = pbwlab::SpecialKind::M2; break;
        default:
            pbwlab::fail(pbwlab::Errc::invalid_argument, "unknown module selector");
        }
        *out = new pbwlab_rep{pbwlab::special_module(n, which)};
    });
}

void pbwlab_rep_free(pbwlab_rep* rep) {
    delete rep;
}

int pbwlab_rep_rank_param(const pbwlab_rep* rep) {
    return rep ? rep->rep.rank_param() : -1;
}

pbwlab_status pbwlab_rep_dim_vector(const pbwlab_rep* rep, int64_t* out, size_t len) {
    if (!rep || !out)
        return null_argument("rep_dim_vector");
    return guarded([&] {
        const auto dim = rep->rep.dim_vector();
        if (len != dim.size())
            pbwlab::fail(pbwlab::Errc::invalid_argument, "dimension buffer has wrong length");
        std::memcpy(out, dim.data(), dim.size() * sizeof(int64_t));
    });
}

pbwlab_status pbwlab_rep_multiplicity(const pbwlab_rep* rep, int i, int j, int64_t* out) {
    if (!rep || !out)
        return null_argument("rep_multiplicity");
    return guarded([&] { *out = rep->rep.multiplicity(i, j); });
}

pbwlab_status pbwlab_rep_rank(const pbwlab_rep* rep, int i, int j, int64_t* out) {
    if (!rep || !out)
        return null_argument("rep_rank");
    return guarded([&] { *out = pbwlab::rank_tuple(rep->rep).at(i, j); });
}

pbwlab_status pbwlab_rep_degenerates_to(const pbwlab_rep* from, const pbwlab_rep* to,
                                        int* out) {
    if (!from || !to || !out)
        return null_argument("rep_degenerates_to");
    return guarded([&] { *out = pbwlab::degenerates_to(from->rep, to->rep) ? 1 : 0; });
}

pbwlab_status pbwlab_rep_count_subreps_fq(const pbwlab_rep* rep, const int64_t* e,
                                          size_t e_len, int64_t p, char** out) {
    if (!rep || !out || (!e && e_len > 0))
        return null_argument("rep_count_subreps_fq");
    return guarded([&] {
        std::vector<long long> dims(e, e + e_len);
        *out = dup_string(pbwlab::count_subreps_fq(rep->rep, dims, p).str());
    });
}

pbwlab_status pbwlab_euler_form(int n, const int64_t* e, const int64_t* d, size_t len,
                                int64_t* out) {
    if (!e || !d || !out)
        return null_argument("euler_form");
    return guarded([&] {
        *out = pbwlab::euler_form(n, std::vector<long long>(e, e + len),
                                  std::vector<long long>(d, d + len));
    });
}

}  /* extern "C" */
