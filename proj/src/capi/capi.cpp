#include "hcensus.h"

#include "core/census.hpp"
#include "core/charts.hpp"

#include <json.hpp>

#include <cstring>
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

using nlohmann::json;

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s)
{
    char* out = (char*)std::malloc(s.size() + 1);
    if (out)
        std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

hc_status fail(hc_status code, const std::string& msg)
{
    g_last_error = msg;
    return code;
}

template <typename F>
hc_status guarded(const F& fn)
{
    try {
        return fn();
    } catch (const std::invalid_argument& e) {
        return fail(HC_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::exception& e) {
        return fail(HC_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(HC_ERR_INTERNAL, "unknown error");
    }
}

hc::ExampleParams to_params(const hc_params* p)
{
    if (!p)
        throw std::invalid_argument("params must not be null");
    hc::ExampleParams out;
    if (p->example)
        out.example = p->example;
    out.n = p->n;
    out.lambda1 = p->lambda1;
    out.lambda2 = p->lambda2;
    out.kappa1 = p->kappa1;
    out.kappa2 = p->kappa2;
    out.eta = p->eta;
    if (p->instance)
        out.instance = p->instance;
    return out;
}

const std::vector<std::string>& ex3_notes()
{
    static const std::vector<std::string> notes = {
        "boundary-escape test uses the (d-1)/lambda ratio rule; for this "
        "boundary shape the escape threshold reads min(l_E, l_D2) > 8/5 * "
        "min(l_ij,k), while a d/lambda convention would give 3/2"};
    return notes;
}

} // namespace

extern "C" {

struct hc_model {
    hc::DivisorModel model;
    std::string example; // empty for file/json models
};

const char* hc_last_error(void)
{
    return g_last_error.c_str();
}

void hc_string_free(char* s)
{
    std::free(s);
}

const char* hc_version(void)
{
    return "1.0.0";
}

void hc_params_init(hc_params* p)
{
    if (!p)
        return;
    p->example = "ex2";
    p->n = 1;
    p->lambda1 = 1;
    p->lambda2 = 1;
    p->kappa1 = 1;
    p->kappa2 = 1;
    p->eta = 0.5;
    p->instance = "default";
}

hc_status hc_model_preset(const hc_params* p, hc_model** out)
{
    return guarded([&]() {
        if (!out)
            throw std::invalid_argument("output pointer must not be null");
        hc::ExampleParams ep = to_params(p);
        hc::DivisorModel m = [&]() {
            if (ep.example == "ex1")
                return hc::preset_ex1();
            if (ep.example == "ex2")
                return hc::preset_ex2(ep.n, ep.lambda1, ep.lambda2);
            if (ep.example == "ex3")
                return hc::preset_ex3(ep.kappa1, ep.kappa2);
            throw std::invalid_argument("unknown example: " + ep.example);
        }();
        *out = new hc_model{std::move(m), ep.example};
        return HC_OK;
    });
}

hc_status hc_model_from_json(const char* text, hc_model** out)
{
    return guarded([&]() {
        if (!text || !out)
            throw std::invalid_argument("null argument");
        *out = new hc_model{hc::DivisorModel::from_json(text), ""};
        return HC_OK;
    });
}

hc_status hc_model_from_file(const char* path, hc_model** out)
{
    return guarded([&]() {
        if (!path || !out)
            throw std::invalid_argument("null argument");
        *out = new hc_model{hc::DivisorModel::from_json_file(path), ""};
        return HC_OK;
    });
}

void hc_model_free(hc_model* m)
{
    delete m;
}

hc_status hc_model_predict(const hc_model* m, char** json_out)
{
    return guarded([&]() {
        if (!m || !json_out)
            throw std::invalid_argument("null argument");
        hc::GrowthPrediction p = hc::predict(m->model);
        if (m->example == "ex3")
            p.notes = ex3_notes();
        *json_out = dup_string(hc::prediction_to_json(p));
        return HC_OK;
    });
}

hc_status hc_model_ratios(const hc_model* m, char** json_out)
{
    return guarded([&]() {
        if (!m || !json_out)
            throw std::invalid_argument("null argument");
        json arr = json::array();
        for (const auto& r : hc::ratio_vector(m->model)) {
            if (r)
                arr.push_back(hc::rat_str(*r));
            else
                arr.push_back(nullptr);
        }
        *json_out = dup_string(arr.dump());
        return HC_OK;
    });
}

hc_status hc_count(const hc_params* p, const char* radius, unsigned workers,
                   const char* stream_path, char** json_out)
{
    return guarded([&]() {
        if (!radius || !json_out)
            throw std::invalid_argument("null argument");
        hc::ExampleParams ep = to_params(p);
        hc::Rat r = hc::parse_rat(radius);

        std::ofstream stream;
        hc::PointSink sink;
        if (stream_path) {
            stream.open(stream_path);
            if (!stream)
                throw std::invalid_argument(std::string("cannot open stream file: ") +
                                            stream_path);
            sink = [&stream](const std::string& line) { stream << line << "\n"; };
        }
        hc::CensusRow row = hc::run_count(ep, r, workers == 0 ? 1 : workers, sink);
        json j;
        j["example"] = ep.example;
        j["R"] = hc::rat_str(row.radius_exact);
        if (row.weighted) {
            j["value"] = row.weighted_sum;
            j["raw_count"] = row.count.get_str();
        } else {
            j["value"] = row.count.get_str();
            j["raw_count"] = row.count.get_str();
        }
        j["points_scanned"] = row.points_scanned;
        j["seconds"] = row.seconds;
        *json_out = dup_string(j.dump(2));
        return HC_OK;
    });
}

hc_status hc_oracle(const hc_params* p, const char* radius, long box,
                    unsigned workers, char** json_out)
{
    return guarded([&]() {
        if (!radius || !json_out)
            throw std::invalid_argument("null argument");
        hc::ExampleParams ep = to_params(p);
        hc::Rat r = hc::parse_rat(radius);
        unsigned w = workers == 0 ? 1 : workers;
        hc::Int count;
        if (ep.example == "ex1")
            count = hc::oracle_ex1(hc::QuadricPairInstance::preset(ep.instance), r, box, w);
        else if (ep.example == "ex2")
            count = hc::oracle_ex2(ep.n, ep.lambda1, ep.lambda2, r, box, w);
        else if (ep.example == "ex3")
            count = hc::oracle_ex3(ep.kappa1, ep.kappa2, r, box, w);
        else
            throw std::invalid_argument("unknown example: " + ep.example);
        json j;
        j["example"] = ep.example;
        j["R"] = hc::rat_str(r);
        j["box"] = box;
        j["count"] = count.get_str();
        *json_out = dup_string(j.dump(2));
        return HC_OK;
    });
}

hc_status hc_ladder_csv(const hc_params* p, const char* r_min, const char* r_max,
                        unsigned steps, unsigned workers, int timing,
                        char** csv_out)
{
    return guarded([&]() {
        if (!r_min || !r_max || !csv_out)
            throw std::invalid_argument("null argument");
        hc::LadderConfig cfg;
        cfg.params = to_params(p);
        cfg.r_min = hc::parse_rat(r_min);
        cfg.r_max = hc::parse_rat(r_max);
        cfg.steps = steps;
        cfg.workers = workers == 0 ? 1 : workers;
        cfg.timing = timing != 0;
        auto rows = hc::run_ladder(cfg);
        *csv_out = dup_string(hc::rows_to_csv(rows, cfg.timing));
        return HC_OK;
    });
}

hc_status hc_fit(const hc_params* p, const char* csv_text, double tolerance,
                 char** json_out)
{
    return guarded([&]() {
        if (!csv_text || !json_out)
            throw std::invalid_argument("null argument");
        hc::ExampleParams ep = to_params(p);
        auto rows = hc::rows_from_csv(csv_text);
        hc::GrowthPrediction pred = hc::predict_for(ep);
        if (ep.example == "ex3")
            pred.notes = ex3_notes();
        hc::FitReport rep = hc::fit_growth(rows, pred, tolerance);
        *json_out = dup_string(hc::fit_report_json(rep, ep));
        return HC_OK;
    });
}

hc_status hc_poles(const char* example, unsigned n, char** json_out)
{
    return guarded([&]() {
        if (!example || !json_out)
            throw std::invalid_argument("null argument");
        hc::PoleReport rep = hc::run_preset(example, n);
        *json_out = dup_string(hc::pole_report_json(rep));
        return HC_OK;
    });
}

hc_status hc_chart_chain(const char* chain_json, const char* const* order_vars,
                         size_t n_order_vars, char** json_out)
{
    return guarded([&]() {
        if (!chain_json || !json_out)
            throw std::invalid_argument("null argument");
        hc::TopForm form = hc::run_chain_json(chain_json);
        std::vector<std::string> vars;
        for (size_t i = 0; i < n_order_vars; ++i)
            vars.push_back(order_vars[i]);
        *json_out = dup_string(hc::chain_result_json(form, vars));
        return HC_OK;
    });
}

hc_status hc_weight(const char* triple, double eta, double* weight_out,
                    double* area_out)
{
    return guarded([&]() {
        if (!triple)
            throw std::invalid_argument("null argument");
        // parse "a,b,c;d,e,f;g,h,i"
        std::vector<std::vector<hc::Int>> cols;
        std::istringstream in(triple);
        std::string part;
        while (std::getline(in, part, ';')) {
            std::vector<hc::Int> col;
            std::istringstream ps(part);
            std::string num;
            while (std::getline(ps, num, ','))
                col.push_back(hc::Int(num));
            cols.push_back(std::move(col));
        }
        if (cols.size() != 3 || cols[0].size() != 3 || cols[1].size() != 3 ||
            cols[2].size() != 3)
            throw std::invalid_argument("triple must be 'a,b,c;d,e,f;g,h,i'");
        hc::TriangleTriple t{hc::IntVector(cols[0]), hc::IntVector(cols[1]),
                             hc::IntVector(cols[2])};
        double area = hc::polygon_area(hc::omega_constraints(t, eta));
        if (area_out)
            *area_out = area;
        if (weight_out)
            *weight_out = area <= 0.0 ? 1.0 : std::min(1.0 / area, 1.0);
        return HC_OK;
    });
}

} // extern "C"
