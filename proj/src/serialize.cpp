#include "ucp/serialize.hpp"

#include <fstream>
#include <functional>
#include <sstream>

#include "ucp/errors.hpp"

namespace ucp {

namespace {

Json rat(const Rational& r) { return format_rational(r); }

Rational unrat(const Json& j, const char* where) {
    if (!j.is_string()) {
        throw ParseError(std::string(where) + ": rationals must be strings");
    }
    return parse_rational(j.get<std::string>());
}

Json rat_list(const std::vector<Rational>& xs) {
    Json out = Json::array();
    for (const auto& x : xs) out.push_back(rat(x));
    return out;
}

std::vector<Rational> unrat_list(const Json& j, const char* where) {
    if (!j.is_array()) {
        throw ParseError(std::string(where) + ": expected an array");
    }
    std::vector<Rational> out;
    out.reserve(j.size());
    for (const auto& v : j) out.push_back(unrat(v, where));
    return out;
}

Json square_matrix(int n, const std::function<const Rational&(int, int)>& get) {
    Json rows = Json::array();
    for (int i = 0; i < n; ++i) {
        Json row = Json::array();
        for (int j = 0; j < n; ++j) row.push_back(rat(get(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

const Json& field(const Json& j, const char* name) {
    const auto it = j.find(name);
    if (it == j.end()) {
        throw ParseError(std::string("missing field \"") + name + "\"");
    }
    return *it;
}

int int_field(const Json& j, const char* name) {
    const Json& v = field(j, name);
    if (!v.is_number_integer()) {
        throw ParseError(std::string("field \"") + name + "\" must be an integer");
    }
    return v.get<int>();
}

}  // namespace

Json instance_to_json(const UcpDecisionInstance& inst) {
    Json payload;
    if (const auto* m = std::get_if<MetricInstance>(&inst.payload)) {
        payload["kind"] = "metric";
        payload["d"] = square_matrix(
            m->n, [&](int i, int j) -> const Rational& { return m->dist(i, j); });
    } else if (const auto* e = std::get_if<EuclideanInstance>(&inst.payload)) {
        payload["kind"] = "points";
        Json pts = Json::array();
        for (const auto& point : e->points) pts.push_back(rat_list(point));
        payload["points"] = std::move(pts);
    } else if (const auto* cfs = std::get_if<std::vector<CFTriple>>(&inst.payload)) {
        payload["kind"] = "cf";
        Json triples = Json::array();
        for (const auto& cf : *cfs) {
            triples.push_back(
                {{"n", cf.n}, {"ls", rat_list(cf.ls)}, {"ss", rat(cf.ss)}});
        }
        payload["cfs"] = std::move(triples);
    } else if (const auto* s = std::get_if<SimilarityMatrix>(&inst.payload)) {
        payload["kind"] = "similarity";
        payload["s"] = square_matrix(
            s->n, [&](int i, int j) -> const Rational& { return s->at(i, j); });
    } else {
        const auto& x = std::get<RationalMatrix>(inst.payload);
        payload["kind"] = "data";
        Json rows = Json::array();
        for (int r = 0; r < x.rows; ++r) {
            Json row = Json::array();
            for (int c = 0; c < x.cols; ++c) row.push_back(rat(x.at(r, c)));
            rows.push_back(std::move(row));
        }
        payload["entries"] = std::move(rows);
    }

    Json utility;
    utility["kind"] = utility_kind_name(inst.utility.kind);
    switch (inst.utility.kind) {
        case UtilityKind::density:
            utility["eps"] = rat(inst.utility.eps);
            utility["s"] = inst.utility.s;
            utility["delta"] = rat(inst.utility.delta);
            break;
        case UtilityKind::multiscale_density:
            utility["eps_max"] = rat(inst.utility.eps_max);
            utility["s"] = inst.utility.s;
            utility["tau"] = inst.utility.tau;
            break;
        case UtilityKind::bisection:
            utility["eps"] = rat(inst.utility.eps);
            break;
        case UtilityKind::diameter:
            utility["diameter"] = rat(inst.utility.diameter);
            break;
        default:
            break;
    }

    Json out;
    out["schema"] = 1;
    out["payload"] = std::move(payload);
    out["utility"] = std::move(utility);
    if (inst.k) {
        out["k"] = *inst.k;
    } else {
        out["k"] = "any";
    }
    out["threshold"] = rat(inst.threshold);
    return out;
}

namespace {

MetricInstance metric_from_payload(const Json& payload) {
    const Json& rows = field(payload, "d");
    if (!rows.is_array() || rows.empty()) {
        throw ParseError("metric payload needs a nonempty \"d\" matrix");
    }
    const int n = static_cast<int>(rows.size());
    std::vector<Rational> d(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        const auto row = unrat_list(rows[i], "d");
        if (static_cast<int>(row.size()) != n) {
            throw ParseError("metric matrix must be square");
        }
        for (int j = 0; j < n; ++j) d[static_cast<std::size_t>(i) * n + j] = row[j];
    }
    return validate_metric(n, std::move(d));
}

EuclideanInstance points_from_payload(const Json& payload) {
    const Json& pts = field(payload, "points");
    if (!pts.is_array() || pts.empty()) {
        throw ParseError("points payload needs a nonempty \"points\" array");
    }
    std::vector<std::vector<Rational>> rows;
    rows.reserve(pts.size());
    for (const auto& p : pts) rows.push_back(unrat_list(p, "points"));
    const int dim = static_cast<int>(rows.front().size());
    return make_euclidean(dim, std::move(rows));
}

std::vector<CFTriple> cfs_from_payload(const Json& payload) {
    const Json& triples = field(payload, "cfs");
    if (!triples.is_array() || triples.empty()) {
        throw ParseError("cf payload needs a nonempty \"cfs\" array");
    }
    std::vector<CFTriple> out;
    out.reserve(triples.size());
    for (const auto& t : triples) {
        const Json& count = field(t, "n");
        if (!count.is_number_integer()) {
            throw ParseError("cf count \"n\" must be an integer");
        }
        out.push_back(make_cf(count.get<long long>(),
                              unrat_list(field(t, "ls"), "ls"),
                              unrat(field(t, "ss"), "ss")));
    }
    return out;
}

SimilarityMatrix similarity_from_payload(const Json& payload) {
    const Json& rows = field(payload, "s");
    if (!rows.is_array() || rows.empty()) {
        throw ParseError("similarity payload needs a nonempty \"s\" matrix");
    }
    const int n = static_cast<int>(rows.size());
    SimilarityMatrix s = SimilarityMatrix::zero(n);
    for (int i = 0; i < n; ++i) {
        const auto row = unrat_list(rows[i], "s");
        if (static_cast<int>(row.size()) != n) {
            throw ParseError("similarity matrix must be square");
        }
        for (int j = 0; j < n; ++j) s.at(i, j) = row[j];
    }
    return s;
}

RationalMatrix data_from_payload(const Json& payload) {
    const Json& rows = field(payload, "entries");
    if (!rows.is_array() || rows.empty()) {
        throw ParseError("data payload needs a nonempty \"entries\" matrix");
    }
    const int r = static_cast<int>(rows.size());
    int c = -1;
    RationalMatrix x;
    for (int i = 0; i < r; ++i) {
        const auto row = unrat_list(rows[i], "entries");
        if (c < 0) {
            c = static_cast<int>(row.size());
            if (c == 0) throw ParseError("data entries need at least one column");
            x = RationalMatrix::zero(r, c);
        } else if (static_cast<int>(row.size()) != c) {
            throw ParseError("data rows must all have the same length");
        }
        for (int j = 0; j < c; ++j) x.at(i, j) = row[j];
    }
    return x;
}

}  // namespace

UcpDecisionInstance instance_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("instance document must be an object");
    if (int_field(j, "schema") != 1) {
        throw ParseError("unsupported schema version");
    }
    const Json& payload = field(j, "payload");
    const Json& kind = field(payload, "kind");
    if (!kind.is_string()) throw ParseError("payload kind must be a string");

    UcpDecisionInstance inst;
    const std::string kind_s = kind.get<std::string>();
    if (kind_s == "metric") {
        inst.payload = metric_from_payload(payload);
    } else if (kind_s == "points") {
        inst.payload = points_from_payload(payload);
    } else if (kind_s == "cf") {
        inst.payload = cfs_from_payload(payload);
    } else if (kind_s == "similarity") {
        inst.payload = similarity_from_payload(payload);
    } else if (kind_s == "data") {
        inst.payload = data_from_payload(payload);
    } else {
        throw ParseError("unknown payload kind \"" + kind_s + "\"");
    }

    const Json& utility = field(j, "utility");
    const Json& ukind = field(utility, "kind");
    if (!ukind.is_string()) throw ParseError("utility kind must be a string");
    inst.utility.kind = utility_kind_from_name(ukind.get<std::string>());
    switch (inst.utility.kind) {
        case UtilityKind::density:
            inst.utility.eps = unrat(field(utility, "eps"), "eps");
            inst.utility.s = int_field(utility, "s");
            inst.utility.delta = unrat(field(utility, "delta"), "delta");
            break;
        case UtilityKind::multiscale_density: {
            inst.utility.eps_max = unrat(field(utility, "eps_max"), "eps_max");
            inst.utility.s = int_field(utility, "s");
            const Json& tau = field(utility, "tau");
            if (!tau.is_number_integer()) {
                throw ParseError("field \"tau\" must be an integer");
            }
            inst.utility.tau = tau.get<long long>();
            break;
        }
        case UtilityKind::bisection:
            inst.utility.eps = unrat(field(utility, "eps"), "eps");
            break;
        case UtilityKind::diameter:
            inst.utility.diameter = unrat(field(utility, "diameter"), "diameter");
            break;
        default:
            break;
    }

    const Json& k = field(j, "k");
    if (k.is_string()) {
        if (k.get<std::string>() != "any") {
            throw ParseError("\"k\" must be an integer or \"any\"");
        }
    } else if (k.is_number_integer()) {
        inst.k = k.get<int>();
    } else {
        throw ParseError("\"k\" must be an integer or \"any\"");
    }
    inst.threshold = unrat(field(j, "threshold"), "threshold");
    return inst;
}

Json ufl_to_json(const UflInstance& u) {
    Json facilities = Json::array();
    for (const auto& f : u.open_cost) facilities.push_back({{"f", rat(f)}});
    Json clients = Json::array();
    for (const auto& row : u.service_cost) clients.push_back({{"c", rat_list(row)}});
    return {{"facilities", std::move(facilities)}, {"clients", std::move(clients)}};
}

UflInstance ufl_from_json(const Json& j) {
    const Json& facilities = field(j, "facilities");
    const Json& clients = field(j, "clients");
    if (!facilities.is_array() || !clients.is_array()) {
        throw ParseError("\"facilities\" and \"clients\" must be arrays");
    }
    std::vector<Rational> open_cost;
    for (const auto& f : facilities) open_cost.push_back(unrat(field(f, "f"), "f"));
    std::vector<std::vector<Rational>> service_cost;
    for (const auto& c : clients) {
        service_cost.push_back(unrat_list(field(c, "c"), "c"));
    }
    return make_ufl(std::move(open_cost), std::move(service_cost));
}

Json l0_to_json(const L0Instance& l) {
    Json rows = Json::array();
    for (int r = 0; r < l.a.rows; ++r) {
        Json row = Json::array();
        for (int c = 0; c < l.a.cols; ++c) row.push_back(rat(l.a.at(r, c)));
        rows.push_back(std::move(row));
    }
    return {{"A", std::move(rows)}, {"b", rat_list(l.b)}, {"t", l.t}};
}

L0Instance l0_from_json(const Json& j) {
    const Json& rows = field(j, "A");
    if (!rows.is_array() || rows.empty()) {
        throw ParseError("\"A\" must be a nonempty matrix");
    }
    const int r = static_cast<int>(rows.size());
    int c = -1;
    RationalMatrix a;
    for (int i = 0; i < r; ++i) {
        const auto row = unrat_list(rows[i], "A");
        if (c < 0) {
            c = static_cast<int>(row.size());
            if (c == 0) throw ParseError("\"A\" needs at least one column");
            a = RationalMatrix::zero(r, c);
        } else if (static_cast<int>(row.size()) != c) {
            throw ParseError("rows of \"A\" must all have the same length");
        }
        for (int jj = 0; jj < c; ++jj) a.at(i, jj) = row[jj];
    }
    const Json& t = field(j, "t");
    if (!t.is_number_integer()) throw ParseError("\"t\" must be an integer");
    return make_l0(std::move(a), unrat_list(field(j, "b"), "b"), t.get<long long>());
}

Json points_to_json(const EuclideanInstance& e) {
    Json pts = Json::array();
    for (const auto& point : e.points) pts.push_back(rat_list(point));
    return {{"points", std::move(pts)}};
}

EuclideanInstance points_from_json(const Json& j) {
    const Json& pts = field(j, "points");
    if (!pts.is_array() || pts.empty()) {
        throw ParseError("\"points\" must be a nonempty array");
    }
    std::vector<std::vector<Rational>> rows;
    rows.reserve(pts.size());
    for (const auto& p : pts) rows.push_back(unrat_list(p, "points"));
    const int dim = static_cast<int>(rows.front().size());
    return make_euclidean(dim, std::move(rows));
}

Json metric_to_json(const MetricInstance& m) {
    return {{"d", square_matrix(m.n, [&](int i, int j) -> const Rational& {
                 return m.dist(i, j);
             })}};
}

MetricInstance metric_from_json(const Json& j) { return metric_from_payload(j); }

namespace {

Json partition_to_json(const Partition& pi) {
    Json labels = Json::array();
    for (int lab : pi.labels) labels.push_back(lab);
    return labels;
}

}  // namespace

Json solve_result_to_json(const SolveResult& r) {
    return {{"optimum", rat(r.optimum)},
            {"argmax", partition_to_json(r.argmax)},
            {"evaluations", r.evaluations}};
}

Json decision_to_json(const Decision& d, const Rational& threshold) {
    Json out;
    out["answer"] = d.yes ? "YES" : "NO";
    out["threshold"] = rat(threshold);
    out["optimum"] = rat(d.result.optimum);
    out["evaluations"] = d.result.evaluations;
    if (d.yes) {
        out["witness"] = partition_to_json(d.witness);
        if (d.ssc_witness) {
            Json rows = Json::array();
            for (int r = 0; r < d.ssc_witness->rows; ++r) {
                Json row = Json::array();
                for (int c = 0; c < d.ssc_witness->cols; ++c) {
                    row.push_back(rat(d.ssc_witness->at(r, c)));
                }
                rows.push_back(std::move(row));
            }
            out["self_expression"] = std::move(rows);
        }
    }
    return out;
}

Json heuristic_run_to_json(const HeuristicRun& run) {
    Json out;
    out["method"] = run.method;
    out["seed"] = run.seed;
    out["iterations"] = run.iterations;
    out["final_partition"] = partition_to_json(run.final_partition);
    out["value"] = rat(run.value);
    out["trajectory"] = rat_list(run.trajectory);
    if (run.method == "ap") out["non_convergence"] = run.non_convergence;
    return out;
}

Json mean_shift_to_json(const MeanShiftResult& ms) {
    Json modes = Json::array();
    for (const auto& mode : ms.modes) {
        Json coords = Json::array();
        for (double v : mode) coords.push_back(v);
        modes.push_back(std::move(coords));
    }
    Json flags = Json::array();
    for (char f : ms.max_iters_exceeded) flags.push_back(f != 0);
    return {{"method", "meanshift"},
            {"modes", std::move(modes)},
            {"final_partition", partition_to_json(ms.partition)},
            {"max_iters_exceeded", std::move(flags)}};
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    Json j;
    try {
        in >> j;
    } catch (const Json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
    return j;
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path);
    out << pretty(j);
}

std::string pretty(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace ucp
