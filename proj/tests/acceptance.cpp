// Acceptance suite: runs every top-level identity through the shared
// library's C API and prints one pass/fail line per criterion, with the
// elapsed time checked against the per-criterion budget.
//
// Usage: pbwlab_acceptance [path/to/dellac_n3.txt]

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pbwlab/pbwlab.h"

namespace {

int g_failures = 0;
int g_criteria = 0;

std::string take(char* s) {
    if (!s)
        return "<null>";
    std::string copy(s);
    pbwlab_string_free(s);
    return copy;
}

void run(int number, const char* name, long budget_ms,
         const std::function<bool(std::string&)>& body) {
    ++g_criteria;
    std::string detail;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    if (ok && elapsed > budget_ms) {
        ok = false;
        detail = "exceeded time budget of " + std::to_string(budget_ms) + " ms";
    }
    if (!ok)
        ++g_failures;
    std::printf("[%s] %2d %-28s (%ld ms)%s%s\n", ok ? "PASS" : "FAIL", number, name, elapsed,
                detail.empty() ? "" : " — ", detail.c_str());
}

bool expect(std::string& detail, bool cond, const std::string& message) {
    if (!cond && detail.empty())
        detail = message;
    return cond;
}

std::vector<std::vector<int64_t>> weights_up_to(int n, int64_t cap) {
    std::vector<std::vector<int64_t>> out;
    std::vector<int64_t> m(static_cast<std::size_t>(n) - 1, 0);
    std::function<void(std::size_t, int64_t)> sweep = [&](std::size_t k, int64_t left) {
        if (k == m.size()) {
            out.push_back(m);
            return;
        }
        for (int64_t v = 0; v <= left; ++v) {
            m[k] = v;
            sweep(k + 1, left - v);
        }
        m[k] = 0;
    };
    sweep(0, cap);
    return out;
}

std::string poly_coeffs(pbwlab_poly* poly) {
    std::string out;
    const int64_t degree = pbwlab_poly_degree(poly);
    for (int64_t k = 0; k <= std::max<int64_t>(degree, 0); ++k) {
        char* c = nullptr;
        if (pbwlab_poly_coeff(poly, static_cast<size_t>(k), &c) != PBWLAB_OK)
            return "<error>";
        if (k)
            out += ",";
        out += take(c);
    }
    return out;
}

using BoxSet = std::set<std::pair<int64_t, int64_t>>;

std::vector<BoxSet> read_fixture(const std::string& path, int n) {
    std::ifstream in(path);
    if (!in.good())
        return {};
    std::vector<BoxSet> configs;
    std::vector<std::string> block;
    auto flush = [&]() {
        if (block.empty())
            return;
        BoxSet boxes;
        for (int j = 1; j <= 2 * n && j <= static_cast<int>(block.size()); ++j)
            for (int l = 1; l <= n && l <= static_cast<int>(block[j - 1].size()); ++l)
                if (block[static_cast<std::size_t>(j) - 1][static_cast<std::size_t>(l) - 1] == 'X')
                    boxes.insert({l, j});
        configs.push_back(std::move(boxes));
        block.clear();
    };
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty())
            flush();
        else
            block.push_back(line);
    }
    flush();
    return configs;
}

}  // namespace

int main(int argc, char** argv) {
    const std::string fixture_path = argc > 1 ? argv[1] : "data/dellac_n3.txt";

    run(1, "genocchi-sequence", 1000, [](std::string& detail) {
        const char* expected[] = {"1", "1", "2", "7", "38", "295"};
        for (int n = 0; n <= 5; ++n) {
            char* h = nullptr;
            if (pbwlab_genocchi_number(n, &h) != PBWLAB_OK)
                return expect(detail, false, "genocchi_number failed");
            if (!expect(detail, take(h) == expected[n], "mismatch at n=" + std::to_string(n)))
                return false;
        }
        return true;
    });

    run(2, "triple-count-agreement", 60000, [](std::string& detail) {
        for (int n = 1; n <= 6; ++n) {
            char* h = nullptr;
            char* cells = nullptr;
            pbwlab_dellac_set* configs = nullptr;
            if (pbwlab_genocchi_number(n, &h) != PBWLAB_OK ||
                pbwlab_flag_collection_count(n, &cells) != PBWLAB_OK ||
                pbwlab_dellac_configs(n, &configs) != PBWLAB_OK)
                return expect(detail, false, "call failed at n=" + std::to_string(n));
            const std::string closed = take(h);
            const std::string flags = take(cells);
            const std::string dellac = std::to_string(pbwlab_dellac_set_size(configs));
            pbwlab_dellac_set_free(configs);
            if (!expect(detail, closed == flags && closed == dellac,
                        "n=" + std::to_string(n) + ": closed=" + closed + " cells=" + flags +
                            " dellac=" + dellac))
                return false;
        }
        return true;
    });

    run(3, "printed-polynomials", 60000, [](std::string& detail) {
        const char* printed[] = {"1", "1,1", "1,2,3,1", "1,3,7,10,10,6,1"};
        for (int n = 1; n <= 6; ++n) {
            pbwlab_poly* dellac = nullptr;
            pbwlab_poly* fermionic = nullptr;
            if (pbwlab_genocchi_poly(n, PBWLAB_GENOCCHI_DELLAC, &dellac) != PBWLAB_OK ||
                pbwlab_genocchi_poly(n, PBWLAB_GENOCCHI_FERMIONIC, &fermionic) != PBWLAB_OK)
                return expect(detail, false, "genocchi_poly failed");
            const bool same = pbwlab_poly_equal(dellac, fermionic) == 1;
            const std::string coeffs = poly_coeffs(dellac);
            pbwlab_poly_free(fermionic);
            pbwlab_poly_free(dellac);
            if (!expect(detail, same, "formulas disagree at n=" + std::to_string(n)))
                return false;
            if (n <= 4 &&
                !expect(detail, coeffs == printed[n - 1],
                        "n=" + std::to_string(n) + ": got " + coeffs))
                return false;
        }
        return true;
    });

    run(4, "dellac-fixture-n3", 60000, [&fixture_path](std::string& detail) {
        const auto fixture = read_fixture(fixture_path, 3);
        if (!expect(detail, fixture.size() == 7,
                    "fixture " + fixture_path + " holds " + std::to_string(fixture.size()) +
                        " configurations, want 7"))
            return false;
        pbwlab_dellac_set* configs = nullptr;
        if (pbwlab_dellac_configs(3, &configs) != PBWLAB_OK)
            return expect(detail, false, "dellac_configs failed");
        std::vector<BoxSet> produced;
        for (int64_t idx = 0; idx < pbwlab_dellac_set_size(configs); ++idx) {
            int64_t cols[6];
            int64_t rows[6];
            if (pbwlab_dellac_boxes(configs, static_cast<size_t>(idx), cols, rows, 6) != PBWLAB_OK) {
                pbwlab_dellac_set_free(configs);
                return expect(detail, false, "dellac_boxes failed");
            }
            BoxSet boxes;
            for (int b = 0; b < 6; ++b)
                boxes.insert({cols[b], rows[b]});
            produced.push_back(std::move(boxes));
        }
        pbwlab_dellac_set_free(configs);
        auto sorted_fixture = fixture;
        std::sort(sorted_fixture.begin(), sorted_fixture.end());
        std::sort(produced.begin(), produced.end());
        return expect(detail, produced == sorted_fixture,
                      "enumeration differs from the transcribed configurations");
    });

    run(5, "fflv-basis-count", 300000, [](std::string& detail) {
        for (int n = 2; n <= 5; ++n)
            for (const auto& m : weights_up_to(n, 4)) {
                char* weyl = nullptr;
                char* gt = nullptr;
                pbwlab_point_set* points = nullptr;
                if (pbwlab_weyl_dim(n, m.data(), m.size(), &weyl) != PBWLAB_OK ||
                    pbwlab_gt_pattern_count(n, m.data(), m.size(), &gt) != PBWLAB_OK ||
                    pbwlab_fflv_points(n, m.data(), m.size(), &points) != PBWLAB_OK)
                    return expect(detail, false, "call failed");
                const std::string dim = take(weyl);
                const std::string gt_count = take(gt);
                const std::string fflv = std::to_string(pbwlab_point_set_size(points));
                pbwlab_point_set_free(points);
                if (!expect(detail, dim == gt_count && dim == fflv,
                            "n=" + std::to_string(n) + ": weyl=" + dim + " gt=" + gt_count +
                                " fflv=" + fflv))
                    return false;
            }
        return true;
    });

    run(6, "minkowski-property", 120000, [](std::string& detail) {
        for (int n = 2; n <= 4; ++n) {
            const auto weights = weights_up_to(n, 2);
            for (const auto& a : weights)
                for (const auto& b : weights) {
                    std::vector<int64_t> total(a.size());
                    for (std::size_t k = 0; k < a.size(); ++k)
                        total[k] = a[k] + b[k];
                    pbwlab_point_set* sa = nullptr;
                    pbwlab_point_set* sb = nullptr;
                    pbwlab_point_set* sum = nullptr;
                    pbwlab_point_set* direct = nullptr;
                    if (pbwlab_fflv_points(n, a.data(), a.size(), &sa) != PBWLAB_OK ||
                        pbwlab_fflv_points(n, b.data(), b.size(), &sb) != PBWLAB_OK ||
                        pbwlab_point_set_minkowski(sa, sb, &sum) != PBWLAB_OK ||
                        pbwlab_fflv_points(n, total.data(), total.size(), &direct) != PBWLAB_OK)
                        return expect(detail, false, "call failed");
                    const bool equal = pbwlab_point_set_equal(sum, direct) == 1;
                    pbwlab_point_set_free(sa);
                    pbwlab_point_set_free(sb);
                    pbwlab_point_set_free(sum);
                    pbwlab_point_set_free(direct);
                    if (!expect(detail, equal, "set mismatch at n=" + std::to_string(n)))
                        return false;
                }
        }
        return true;
    });

    run(7, "pbw-tableau-count", 120000, [](std::string& detail) {
        for (int n = 2; n <= 4; ++n)
            for (const auto& m : weights_up_to(n, 3)) {
                char* weyl = nullptr;
                char* tab = nullptr;
                if (pbwlab_weyl_dim(n, m.data(), m.size(), &weyl) != PBWLAB_OK ||
                    pbwlab_pbw_tableau_count(n, m.data(), m.size(), &tab) != PBWLAB_OK)
                    return expect(detail, false, "call failed");
                const std::string dim = take(weyl);
                const std::string count = take(tab);
                if (!expect(detail, dim == count,
                            "n=" + std::to_string(n) + ": weyl=" + dim + " tableaux=" + count))
                    return false;
            }
        return true;
    });

    run(8, "euler-form-dimension", 1000, [](std::string& detail) {
        for (int n = 2; n <= 12; ++n) {
            std::vector<int64_t> e(static_cast<std::size_t>(n) - 1);
            for (int k = 1; k <= n - 1; ++k)
                e[static_cast<std::size_t>(k) - 1] = k;
            std::vector<int64_t> d(e.rbegin(), e.rend());
            int64_t value = 0;
            if (pbwlab_euler_form(n, e.data(), d.data(), e.size(), &value) != PBWLAB_OK)
                return expect(detail, false, "euler_form failed");
            if (!expect(detail, value == n * (n - 1) / 2,
                        "n=" + std::to_string(n) + ": got " + std::to_string(value)))
                return false;
        }
        return true;
    });

    run(9, "degeneration-chain", 60000, [](std::string& detail) {
        for (int n = 3; n <= 6; ++n) {
            pbwlab_rep* m0 = nullptr;
            pbwlab_rep* m1 = nullptr;
            pbwlab_rep* m2 = nullptr;
            if (pbwlab_rep_special(n, PBWLAB_MODULE_M0, &m0) != PBWLAB_OK ||
                pbwlab_rep_special(n, PBWLAB_MODULE_M1, &m1) != PBWLAB_OK ||
                pbwlab_rep_special(n, PBWLAB_MODULE_M2, &m2) != PBWLAB_OK)
                return expect(detail, false, "rep_special failed");
            int d01 = -1, d10 = -1, d12 = -1, d21 = -1;
            const bool ok = pbwlab_rep_degenerates_to(m0, m1, &d01) == PBWLAB_OK &&
                            pbwlab_rep_degenerates_to(m1, m0, &d10) == PBWLAB_OK &&
                            pbwlab_rep_degenerates_to(m1, m2, &d12) == PBWLAB_OK &&
                            pbwlab_rep_degenerates_to(m2, m1, &d21) == PBWLAB_OK;
            pbwlab_rep_free(m0);
            pbwlab_rep_free(m1);
            pbwlab_rep_free(m2);
            if (!expect(detail, ok, "degenerates_to failed") ||
                !expect(detail, d01 == 1 && d12 == 1 && d10 == 0 && d21 == 0,
                        "wrong order at n=" + std::to_string(n)))
                return false;
        }
        return true;
    });

    run(10, "finite-field-oracle", 300000, [](std::string& detail) {
        for (int n = 2; n <= 4; ++n)
            for (int64_t p : {2, 3}) {
                std::vector<int64_t> e(static_cast<std::size_t>(n) - 1);
                for (int k = 1; k <= n - 1; ++k)
                    e[static_cast<std::size_t>(k) - 1] = k;

                pbwlab_rep* m1 = nullptr;
                pbwlab_rep* m0 = nullptr;
                pbwlab_poly* poly = nullptr;
                char* m1_count = nullptr;
                char* m0_count = nullptr;
                char* h_at_p = nullptr;
                if (pbwlab_rep_special(n, PBWLAB_MODULE_M1, &m1) != PBWLAB_OK ||
                    pbwlab_rep_special(n, PBWLAB_MODULE_M0, &m0) != PBWLAB_OK ||
                    pbwlab_genocchi_poly(n, PBWLAB_GENOCCHI_DELLAC, &poly) != PBWLAB_OK ||
                    pbwlab_rep_count_subreps_fq(m1, e.data(), e.size(), p, &m1_count) != PBWLAB_OK ||
                    pbwlab_rep_count_subreps_fq(m0, e.data(), e.size(), p, &m0_count) != PBWLAB_OK ||
                    pbwlab_poly_eval(poly, p, &h_at_p) != PBWLAB_OK)
                    return expect(detail, false, "call failed");
                pbwlab_rep_free(m1);
                pbwlab_rep_free(m0);
                pbwlab_poly_free(poly);

                // classical flag count: product over k of 1 + p + ... + p^k
                long long flags = 1;
                for (int k = 1; k <= n - 1; ++k) {
                    long long geometric = 0;
                    long long power = 1;
                    for (int t = 0; t <= k; ++t) {
                        geometric += power;
                        power *= p;
                    }
                    flags *= geometric;
                }
                const std::string got_m1 = take(m1_count);
                const std::string got_m0 = take(m0_count);
                const std::string want_m1 = take(h_at_p);
                if (!expect(detail, got_m1 == want_m1,
                            "n=" + std::to_string(n) + " p=" + std::to_string(p) + ": Gr(M1)=" +
                                got_m1 + " but h_n(p)=" + want_m1) ||
                    !expect(detail, got_m0 == std::to_string(flags),
                            "n=" + std::to_string(n) + " p=" + std::to_string(p) + ": Gr(M0)=" +
                                got_m0 + " but flags=" + std::to_string(flags)))
                    return false;
            }
        return true;
    });

    run(11, "poincare-degree-law", 60000, [](std::string& detail) {
        for (int n = 2; n <= 6; ++n) {
            pbwlab_poly* poly = nullptr;
            if (pbwlab_genocchi_poly(n, PBWLAB_GENOCCHI_DELLAC, &poly) != PBWLAB_OK)
                return expect(detail, false, "genocchi_poly failed");
            const int64_t degree = pbwlab_poly_degree(poly);
            pbwlab_poly_free(poly);
            if (!expect(detail, degree == n * (n - 1) / 2,
                        "n=" + std::to_string(n) + ": degree " + std::to_string(degree)))
                return false;
        }
        return true;
    });

    std::printf("acceptance: %d/%d criteria passed\n", g_criteria - g_failures, g_criteria);
    return g_failures == 0 ? 0 : 1;
}
