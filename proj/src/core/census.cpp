#include "census.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <sstream>

namespace hc {

using nlohmann::json;

CensusRow run_count(const ExampleParams& p, const Rat& radius, unsigned workers,
                    const PointSink& sink)
{
    CountResult cr;
    CensusRow row;
    if (p.example == "ex1") {
        cr = enumerate_ex1(QuadricPairInstance::preset(p.instance), radius, workers, sink);
    } else if (p.example == "ex2") {
        cr = enumerate_ex2(p.n, p.lambda1, p.lambda2, radius, workers, sink);
    } else if (p.example == "ex3") {
        cr = enumerate_ex3(p.kappa1, p.kappa2, radius, p.eta, workers, sink);
        row.weighted = true;
    } else {
        throw std::invalid_argument("unknown example: " + p.example);
    }
    row.radius_exact = radius;
    row.radius = radius.get_d();
    row.count = cr.count;
    row.weighted_sum = cr.weighted_sum;
    row.points_scanned = cr.points_scanned;
    row.seconds = cr.seconds;
    return row;
}

std::vector<CensusRow> run_ladder(const LadderConfig& cfg)
{
    if (cfg.steps < 4)
        throw std::invalid_argument("ladder needs at least 4 steps");
    if (cfg.r_min < 1 || cfg.r_max <= cfg.r_min)
        throw std::invalid_argument("ladder needs 1 <= r_min < r_max");

    std::vector<CensusRow> rows;
    const double lo = cfg.r_min.get_d();
    const double hi = cfg.r_max.get_d();
    for (unsigned k = 0; k < cfg.steps; ++k) {
        double r = lo * std::pow(hi / lo, double(k) / double(cfg.steps - 1));
        Rat radius(r); // exact dyadic value of the double
        radius.canonicalize();
        CensusRow row = run_count(cfg.params, radius, cfg.workers);
        if (!cfg.timing)
            row.seconds = 0.0;
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

std::string format_value(const CensusRow& r)
{
    if (!r.weighted)
        return r.count.get_str();
    std::ostringstream os;
    os.precision(15);
    os << r.weighted_sum;
    return os.str();
}

std::string format_double(double x)
{
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

} // namespace

std::string rows_to_csv(const std::vector<CensusRow>& rows, bool timing)
{
    std::ostringstream os;
    os << "R,value,points_scanned,seconds\n";
    for (const auto& r : rows) {
        os << format_double(r.radius) << "," << format_value(r) << ","
           << r.points_scanned << "," << (timing ? format_double(r.seconds) : "0")
           << "\n";
    }
    return os.str();
}

std::vector<CensusRow> rows_from_csv(const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line))
        throw std::invalid_argument("empty CSV");
    if (line.rfind("R,value", 0) != 0)
        throw std::invalid_argument("unexpected CSV header: " + line);
    std::vector<CensusRow> rows;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        std::istringstream ls(line);
        std::string fr, fv, fs, ft;
        if (!std::getline(ls, fr, ',') || !std::getline(ls, fv, ',') ||
            !std::getline(ls, fs, ',') || !std::getline(ls, ft, ','))
            throw std::invalid_argument("short CSV row: " + line);
        CensusRow row;
        row.radius = std::stod(fr);
        row.radius_exact = Rat(row.radius);
        if (fv.find('.') != std::string::npos || fv.find('e') != std::string::npos) {
            row.weighted = true;
            row.weighted_sum = std::stod(fv);
        } else {
            row.count = Int(fv);
        }
        row.points_scanned = std::stoll(fs);
        row.seconds = std::stod(ft);
        rows.push_back(std::move(row));
    }
    return rows;
}

FitReport fit_growth(const std::vector<CensusRow>& rows,
                     const GrowthPrediction& prediction, double tolerance,
                     double value_floor)
{
    FitReport rep;
    rep.prediction = prediction;

    // small-R transients are skipped: only the top half of the ladder
    // enters, and only rows with a usable value
    std::vector<std::pair<double, double>> pts; // (log R, log value)
    size_t start = rows.size() / 2;
    for (size_t i = start; i < rows.size(); ++i) {
        double v = rows[i].value();
        if (v >= value_floor && rows[i].radius > 1.0)
            pts.push_back({std::log(rows[i].radius), std::log(v)});
    }
    rep.rows_used = pts.size();
    if (pts.size() < 4)
        return rep; // inconclusive

    bool constant_rows = true;
    for (size_t i = 1; i < pts.size(); ++i)
        constant_rows &= (pts[i].second == pts[0].second);
    if (constant_rows)
        return rep; // inconclusive

    auto least_squares = [](const std::vector<std::pair<double, double>>& xy,
                            double& slope, double& icept) {
        double n = double(xy.size());
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (auto [x, y] : xy) {
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
        }
        double det = n * sxx - sx * sx;
        slope = (n * sxy - sx * sy) / det;
        icept = (sy * sxx - sx * sxy) / det;
    };
    auto rss_of = [](const std::vector<std::pair<double, double>>& xy, double slope,
                     double icept) {
        double s = 0;
        for (auto [x, y] : xy) {
            double e = y - slope * x - icept;
            s += e * e;
        }
        return s;
    };

    // model without the log factor: log v = log c + a log R
    double a0, c0;
    least_squares(pts, a0, c0);
    rep.rss_without_log = rss_of(pts, a0, c0);

    // model with the predicted log power: the coefficient of log log R is
    // pinned to b-1, never fitted (it is numerically degenerate at this
    // scale), so the correction moves to the left-hand side
    int logpow = prediction.b - 1;
    std::vector<std::pair<double, double>> pts_log = pts;
    for (auto& [x, y] : pts_log)
        y -= double(logpow) * std::log(x);
    double a1, c1;
    least_squares(pts_log, a1, c1);
    rep.rss_with_log = rss_of(pts_log, a1, c1);

    bool prefer_log = logpow > 0 && rep.rss_with_log < rep.rss_without_log;
    rep.preferred_model = prefer_log ? "log" : "no-log";
    rep.a_hat = prefer_log ? a1 : (logpow > 0 ? a1 : a0);
    rep.c_hat = std::exp(prefer_log ? c1 : (logpow > 0 ? c1 : c0));
    // a_hat always comes from the log-model slope when a log power is
    // predicted; otherwise the two models coincide

    double a_pred = prediction.a.get_d();
    rep.verdict = std::fabs(rep.a_hat - a_pred) <= tolerance ? "consistent"
                                                             : "inconsistent";
    return rep;
}

GrowthPrediction predict_for(const ExampleParams& p)
{
    if (p.example == "ex1")
        return predict(preset_ex1());
    if (p.example == "ex2")
        return predict(preset_ex2(p.n, p.lambda1, p.lambda2));
    if (p.example == "ex3")
        return predict(preset_ex3(p.kappa1, p.kappa2));
    throw std::invalid_argument("unknown example: " + p.example);
}

std::string fit_report_json(const FitReport& rep, const ExampleParams& params)
{
    json j;
    j["example"] = params.example;
    json pj;
    if (params.example == "ex1") {
        pj["instance"] = params.instance;
    } else if (params.example == "ex2") {
        pj["n"] = params.n;
        pj["lambda1"] = params.lambda1;
        pj["lambda2"] = params.lambda2;
    } else {
        pj["kappa1"] = params.kappa1;
        pj["kappa2"] = params.kappa2;
        pj["eta"] = params.eta;
    }
    j["params"] = pj;
    json pred;
    pred["a"] = rat_str(rep.prediction.a);
    pred["b"] = rep.prediction.b;
    if (rep.prediction.focusing == Focusing::not_applicable)
        pred["focusing"] = "n/a";
    else
        pred["focusing"] = rep.prediction.focusing == Focusing::yes;
    pred["law"] = rep.prediction.law;
    j["prediction"] = pred;
    json fit;
    fit["a_hat"] = rep.a_hat;
    fit["c_hat"] = rep.c_hat;
    fit["rss_log"] = rep.rss_with_log;
    fit["rss_nolog"] = rep.rss_without_log;
    fit["preferred"] = rep.preferred_model;
    fit["rows_used"] = rep.rows_used;
    j["fit"] = fit;
    j["verdict"] = rep.verdict;
    json notes = json::array();
    notes.push_back("log-power coefficient pinned to b-1 from the prediction, not fitted");
    notes.push_back("weights and polygon volumes use Lebesgue measure in (t1,t2) after t3 = -t1-t2");
    for (const auto& n : rep.prediction.notes)
        notes.push_back(n);
    j["notes"] = notes;
    return j.dump(2);
}

std::map<std::string, std::string> parse_config_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open config file: " + path);
    std::map<std::string, std::string> kv;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        auto trim = [](std::string s) {
            size_t a = s.find_first_not_of(" \t\r\n");
            if (a == std::string::npos)
                return std::string();
            size_t b = s.find_last_not_of(" \t\r\n");
            return s.substr(a, b - a + 1);
        };
        std::string t = trim(line);
        if (t.empty())
            continue;
        auto eq = t.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        " is not 'key = value'");
        std::string key = trim(t.substr(0, eq));
        std::string val = trim(t.substr(eq + 1));
        if (key.empty() || val.empty())
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        " is not 'key = value'");
        kv[key] = val;
    }
    return kv;
}

void apply_config(const std::map<std::string, std::string>& kv, ExampleParams& p,
                  LadderConfig* ladder, double* tolerance, long* oracle_box)
{
    auto get_unsigned = [](const std::string& v, const std::string& key) {
        long x = std::stol(v);
        if (x < 0)
            throw std::invalid_argument("config key " + key + " must be nonnegative");
        return unsigned(x);
    };
    for (const auto& [key, val] : kv) {
        if (key == "example")
            p.example = val;
        else if (key == "n")
            p.n = get_unsigned(val, key);
        else if (key == "lambda1")
            p.lambda1 = get_unsigned(val, key);
        else if (key == "lambda2")
            p.lambda2 = get_unsigned(val, key);
        else if (key == "kappa1")
            p.kappa1 = get_unsigned(val, key);
        else if (key == "kappa2")
            p.kappa2 = get_unsigned(val, key);
        else if (key == "eta")
            p.eta = std::stod(val);
        else if (key == "instance")
            p.instance = val;
        else if (key == "r_min") {
            if (ladder)
                ladder->r_min = parse_rat(val);
        } else if (key == "r_max") {
            if (ladder)
                ladder->r_max = parse_rat(val);
        } else if (key == "steps") {
            if (ladder)
                ladder->steps = get_unsigned(val, key);
        } else if (key == "workers") {
            if (ladder)
                ladder->workers = get_unsigned(val, key);
        } else if (key == "timing") {
            if (ladder)
                ladder->timing = (val == "on" || val == "true" || val == "1");
        } else if (key == "tolerance") {
            if (tolerance)
                *tolerance = std::stod(val);
        } else if (key == "oracle_box") {
            if (oracle_box)
                *oracle_box = std::stol(val);
        } else {
            throw std::invalid_argument("unknown config key: " + key);
        }
    }
}

} // namespace hc
