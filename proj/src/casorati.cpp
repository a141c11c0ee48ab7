#include "detlab/casorati.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include <omp.h>

#include "json.hpp"

#include "detlab/determinant.hpp"
#include "detlab/errors.hpp"
#include "detlab/render.hpp"

namespace detlab {

IndexSet::IndexSet(std::vector<std::size_t> indices) : indices_(std::move(indices)) {
    if (indices_.empty()) {
        throw InvalidArgumentError("IndexSet: must contain at least one index");
    }
    for (std::size_t i = 1; i < indices_.size(); ++i) {
        if (indices_[i - 1] >= indices_[i]) {
            throw InvalidArgumentError("IndexSet: indices must be strictly increasing");
        }
    }
}

IndexSet IndexSet::consecutive(std::size_t n, std::size_t l) {
    if (l == 0) {
        throw InvalidArgumentError("IndexSet: block size must be >= 1");
    }
    std::vector<std::size_t> idx(l);
    for (std::size_t i = 0; i < l; ++i) idx[i] = n + i;
    return IndexSet(std::move(idx));
}

std::string IndexSet::describe() const {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < indices_.size(); ++i) {
        if (i > 0) out << ", ";
        out << indices_[i];
    }
    out << '}';
    return out.str();
}

namespace {

// P_d(a_j) for every degree in `degrees` (sorted ascending) at every node.
// Returned vector is indexed by degree; slots for unrequested degrees stay
// empty. One polynomial construction per degree, shared by all scan cells.
std::vector<std::vector<mpz_class>> poly_values(const DiscreteMeasure& mu,
                                                const std::vector<std::size_t>& degrees) {
    std::vector<std::vector<mpz_class>> table(degrees.empty() ? 0 : degrees.back() + 1);
    for (std::size_t d : degrees) {
        if (!table[d].empty()) continue;
        const IntPolynomial p = orthogonal_poly(mu, d);
        std::vector<mpz_class> row;
        row.reserve(mu.size());
        for (std::size_t j = 0; j < mu.size(); ++j) {
            row.push_back(eval_poly(p, mu.node(j)));
        }
        table[d] = std::move(row);
    }
    return table;
}

IntMatrix matrix_from_table(const std::vector<std::vector<mpz_class>>& table,
                            const std::vector<std::size_t>& degrees, std::size_t k) {
    const std::size_t l = degrees.size();
    IntMatrix m(l, l);
    for (std::size_t i = 0; i < l; ++i) {
        const std::vector<mpz_class>& row = table[degrees[i]];
        for (std::size_t j = 0; j < l; ++j) {
            m.at(i, j) = row[k + j];
        }
    }
    return m;
}

mpz_class checked_det(const IntMatrix& m, const std::string& where) {
    mpz_class bareiss = det_bareiss(m);
    mpz_class modular = det_modular_serial(m);
    if (bareiss != modular) {
        throw InternalDisagreementError(where + ": bareiss=" + render_scientific(bareiss) +
                                        " modular=" + render_scientific(modular));
    }
    return bareiss;
}

// One scan cell: a (n, k) position plus the degrees of its rows. The degree
// vectors live in the caller; tasks only reference them.
struct CellTask {
    std::optional<std::size_t> n;
    std::size_t k = 0;
    const std::vector<std::size_t>* degrees = nullptr;
};

std::string cell_name(const CellTask& t) {
    std::ostringstream out;
    if (t.n) out << "n=" << *t.n << " ";
    out << "k=" << t.k;
    return out.str();
}

// Evaluates every task's determinant. jobs <= 1 is the serial reference
// path; otherwise cells are distributed across OpenMP threads and written
// to per-task slots, so assembly order never depends on completion order.
std::vector<mpz_class> evaluate_cells(const std::vector<std::vector<mpz_class>>& table,
                                      const std::vector<CellTask>& tasks, int jobs) {
    std::vector<mpz_class> values(tasks.size());
    if (jobs == 0) jobs = omp_get_max_threads();
    if (jobs <= 1 || tasks.size() < 2) {
        for (std::size_t t = 0; t < tasks.size(); ++t) {
            values[t] = checked_det(matrix_from_table(table, *tasks[t].degrees, tasks[t].k),
                                    "casorati " + cell_name(tasks[t]));
        }
        return values;
    }

    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs)
    for (long t = 0; t < static_cast<long>(tasks.size()); ++t) {
        try {
            const CellTask& task = tasks[static_cast<std::size_t>(t)];
            values[static_cast<std::size_t>(t)] =
                checked_det(matrix_from_table(table, *task.degrees, task.k),
                            "casorati " + cell_name(task));
        } catch (...) {
#pragma omp critical(detlab_casorati_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return values;
}

ScanReport assemble_report(std::string kind, const DiscreteMeasure& mu, std::string index_desc,
                           std::size_t l, const std::vector<CellTask>& tasks,
                           const std::vector<mpz_class>& values, int jobs) {
    ScanReport report;
    report.kind = std::move(kind);
    report.measure = mu.describe();
    report.index_set = std::move(index_desc);
    report.l = l;
    report.jobs = jobs;
    report.cells.reserve(tasks.size());

    for (std::size_t t = 0; t < tasks.size(); ++t) {
        const mpz_class& v = values[t];
        ScanCell cell;
        cell.n = tasks[t].n;
        cell.k = tasks[t].k;
        cell.sign = sgn(v);
        cell.rendered = render_scientific(v);
        if (v <= 0) {
            report.violations.push_back({cell.n, cell.k, v == 0, cell.rendered});
        }
        if (!report.has_min || v < report.min_value) {
            report.has_min = true;
            report.min_value = v;
            report.min_rendered = cell.rendered;
            report.min_n = cell.n;
            report.min_k = cell.k;
        }
        report.cells.push_back(std::move(cell));
    }
    return report;
}

}  // namespace

std::string ScanReport::to_json(int indent) const {
    nlohmann::json j;
    j["kind"] = kind;
    j["measure"] = measure;
    j["index_set"] = index_set;
    j["l"] = l;
    j["cells"] = nlohmann::json::array();
    for (const ScanCell& c : cells) {
        nlohmann::json jc;
        if (c.n) jc["n"] = *c.n;
        jc["k"] = c.k;
        jc["sign"] = c.sign;
        jc["value"] = c.rendered;
        j["cells"].push_back(std::move(jc));
    }
    j["violations"] = nlohmann::json::array();
    for (const ScanViolation& v : violations) {
        nlohmann::json jv;
        if (v.n) jv["n"] = *v.n;
        jv["k"] = v.k;
        jv["zero"] = v.zero;
        jv["value"] = v.rendered;
        j["violations"].push_back(std::move(jv));
    }
    if (has_min) {
        j["min"] = {{"value", min_value.get_str()}, {"rendered", min_rendered}, {"k", min_k}};
        if (min_n) j["min"]["n"] = *min_n;
    } else {
        j["min"] = nullptr;
    }
    j["generator_id"] = generator_id;
    if (seed) j["seed"] = *seed;
    if (!timestamp.empty()) j["timestamp"] = timestamp;
    j["jobs"] = jobs;
    return j.dump(indent);
}

IntMatrix casorati_matrix(const DiscreteMeasure& mu, const IndexSet& f, std::size_t k) {
    const std::size_t n_points = mu.size();
    const std::size_t l = f.size();
    if (f.max_index() > n_points - 1) {
        throw DegreeOutOfRangeError("casorati_matrix: index " + std::to_string(f.max_index()) +
                                    " exceeds degree cap " + std::to_string(n_points - 1));
    }
    if (k + l - 1 > n_points - 1) {
        throw NodeIndexOutOfRangeError("casorati_matrix: columns k=" + std::to_string(k) +
                                       "..k+" + std::to_string(l - 1) + " exceed node range 0.." +
                                       std::to_string(n_points - 1));
    }
    const std::vector<std::vector<mpz_class>> table = poly_values(mu, f.indices());
    return matrix_from_table(table, f.indices(), k);
}

mpz_class casorati_det(const DiscreteMeasure& mu, const IndexSet& f, std::size_t k) {
    return checked_det(casorati_matrix(mu, f, k),
                       "casorati_det F=" + f.describe() + " k=" + std::to_string(k));
}

ScanReport ks_scan(const DiscreteMeasure& mu, std::size_t l, std::size_t n_max,
                   std::size_t k_max, int jobs) {
    if (l == 0) {
        throw InvalidArgumentError("ks_scan: block size l must be >= 1");
    }
    const std::size_t n_points = mu.size();

    std::vector<std::vector<std::size_t>> degree_rows;  // one per surviving n
    std::vector<CellTask> tasks;
    if (l <= n_points) {
        const std::size_t n_hi = std::min(n_max, n_points - l);  // n + l - 1 <= N - 1
        const std::size_t k_hi = std::min(k_max, n_points - l);
        degree_rows.reserve(n_hi + 1);
        for (std::size_t n = 0; n <= n_hi; ++n) {
            degree_rows.push_back(IndexSet::consecutive(n, l).indices());
        }
        for (std::size_t n = 0; n <= n_hi; ++n) {
            for (std::size_t k = 0; k <= k_hi; ++k) {
                tasks.push_back({n, k, &degree_rows[n]});
            }
        }
    }

    std::vector<std::size_t> all_degrees;
    for (const auto& row : degree_rows) all_degrees.insert(all_degrees.end(), row.begin(), row.end());
    std::sort(all_degrees.begin(), all_degrees.end());
    const auto table = poly_values(mu, all_degrees);

    const std::vector<mpz_class> values = evaluate_cells(table, tasks, jobs);
    return assemble_report("consecutive", mu, "l=" + std::to_string(l) + " consecutive", l,
                           tasks, values, jobs);
}

ScanReport general_scan(const DiscreteMeasure& mu, const IndexSet& f, std::size_t k_max,
                        int jobs) {
    const std::size_t n_points = mu.size();
    const std::size_t l = f.size();
    if (f.max_index() > n_points - 1) {
        throw DegreeOutOfRangeError("general_scan: index " + std::to_string(f.max_index()) +
                                    " exceeds degree cap " + std::to_string(n_points - 1));
    }

    const std::vector<std::size_t> degrees = f.indices();
    std::vector<CellTask> tasks;
    if (l <= n_points) {
        const std::size_t k_hi = std::min(k_max, n_points - l);
        for (std::size_t k = 0; k <= k_hi; ++k) {
            tasks.push_back({std::nullopt, k, &degrees});
        }
    }

    const auto table = poly_values(mu, degrees);
    const std::vector<mpz_class> values = evaluate_cells(table, tasks, jobs);
    return assemble_report("general", mu, f.describe(), l, tasks, values, jobs);
}

}  // namespace detlab
