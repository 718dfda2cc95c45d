// Command-line front end over the hcensus C API.

#include "hcensus.h"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace {

struct Options {
    std::string example = "ex2";
    unsigned n = 1;
    unsigned lambda1 = 1, lambda2 = 1;
    unsigned kappa1 = 1, kappa2 = 1;
    double eta = 0.5;
    std::string instance = "default";
    unsigned workers = 1;
    double tolerance = 0.15;
    long oracle_box = 0;
    std::string config_path;
};

void add_param_flags(CLI::App* cmd, Options& o, bool with_workers = true)
{
    cmd->add_option("--example", o.example, "ex1, ex2 or ex3");
    cmd->add_option("--n", o.n, "rank of the complement (ex2)");
    cmd->add_option("--l1", o.lambda1, "first height exponent (ex2)");
    cmd->add_option("--l2", o.lambda2, "second height exponent (ex2)");
    cmd->add_option("--k1", o.kappa1, "first height exponent (ex3)");
    cmd->add_option("--k2", o.kappa2, "second height exponent (ex3)");
    cmd->add_option("--eta", o.eta, "weight threshold in (0,1] (ex3)");
    cmd->add_option("--instance", o.instance, "ex1 quadric pair: default or split");
    cmd->add_option("--config", o.config_path, "flat key = value config file");
    if (with_workers)
        cmd->add_option("--workers", o.workers, "worker threads");
}

hc_params to_capi(const Options& o)
{
    hc_params p;
    hc_params_init(&p);
    p.example = o.example.c_str();
    p.n = o.n;
    p.lambda1 = o.lambda1;
    p.lambda2 = o.lambda2;
    p.kappa1 = o.kappa1;
    p.kappa2 = o.kappa2;
    p.eta = o.eta;
    p.instance = o.instance.c_str();
    return p;
}

// the config file is parsed here (flat key = value) and command-line flags
// win on conflicts, so apply it before reparsing the flags
void merge_config(const std::string& path, Options& o,
                  std::map<std::string, std::string>* extra)
{
    std::ifstream in(path);
    if (!in)
        throw CLI::ValidationError("--config", "cannot open config file " + path);
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
            throw CLI::ValidationError("--config", "line " + std::to_string(lineno) +
                                                       " is not 'key = value'");
        std::string key = trim(t.substr(0, eq));
        std::string val = trim(t.substr(eq + 1));
        if (key == "example")
            o.example = val;
        else if (key == "n")
            o.n = unsigned(std::stoul(val));
        else if (key == "lambda1")
            o.lambda1 = unsigned(std::stoul(val));
        else if (key == "lambda2")
            o.lambda2 = unsigned(std::stoul(val));
        else if (key == "kappa1")
            o.kappa1 = unsigned(std::stoul(val));
        else if (key == "kappa2")
            o.kappa2 = unsigned(std::stoul(val));
        else if (key == "eta")
            o.eta = std::stod(val);
        else if (key == "instance")
            o.instance = val;
        else if (key == "workers")
            o.workers = unsigned(std::stoul(val));
        else if (key == "tolerance")
            o.tolerance = std::stod(val);
        else if (key == "oracle_box")
            o.oracle_box = std::stol(val);
        else if (extra)
            (*extra)[key] = val;
        else
            throw CLI::ValidationError("--config", "unknown key " + key);
    }
}

int report_error(hc_status st)
{
    std::cerr << "error: " << hc_last_error() << "\n";
    return st == HC_ERR_INVALID_ARGUMENT || st == HC_ERR_PARSE ? 1 : 3;
}

std::string take(char* s)
{
    std::string out = s ? s : "";
    hc_string_free(s);
    return out;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw CLI::ValidationError("file", "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path);
    if (!out)
        throw CLI::ValidationError("file", "cannot write " + path);
    out << text;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"census of integral points of bounded height on three "
                 "homogeneous varieties"};
    app.require_subcommand(1);

    Options o;

    // predict
    auto* predict = app.add_subcommand("predict", "growth-law prediction from boundary data");
    std::string model_path;
    add_param_flags(predict, o, false);
    predict->add_option("--model", model_path, "divisor model JSON file instead of a preset");
    bool show_ratios = false;
    predict->add_flag("--ratios", show_ratios, "also print the (d-1)/lambda ratio vector");

    // count
    auto* count = app.add_subcommand("count", "count points of height <= R");
    std::string radius = "10";
    std::string stream_path;
    add_param_flags(count, o);
    count->add_option("--radius,-R", radius, "height bound (decimal or p/q)")->required();
    count->add_option("--stream", stream_path, "write accepted points to this file");

    // ladder
    auto* ladder = app.add_subcommand("ladder", "run a geometric R-ladder and emit CSV");
    std::string r_min = "1", r_max = "100", out_path;
    unsigned steps = 8;
    bool no_timing = false;
    add_param_flags(ladder, o);
    ladder->add_option("--r-min", r_min, "smallest radius");
    ladder->add_option("--r-max", r_max, "largest radius");
    ladder->add_option("--steps", steps, "number of ladder rungs");
    ladder->add_option("--out,-o", out_path, "CSV output path (default stdout)");
    ladder->add_flag("--no-timing", no_timing, "zero the seconds column (reproducible output)");

    // fit
    auto* fit = app.add_subcommand("fit", "fit a growth law to ladder CSV data");
    std::string csv_path, report_path, plot_data, plot_script_path;
    bool strict = false;
    add_param_flags(fit, o, false);
    fit->add_option("--csv", csv_path, "ladder CSV file")->required();
    fit->add_option("--tolerance", o.tolerance, "allowed |a_hat - a|");
    fit->add_option("--out,-o", report_path, "report JSON path (default stdout)");
    fit->add_option("--plot-data", plot_data, "write a two-column R/value file");
    fit->add_option("--plot-script", plot_script_path, "write a gnuplot script");
    fit->add_flag("--strict", strict, "exit 2 when the verdict is inconsistent");

    // poles
    auto* poles = app.add_subcommand("poles", "recompute gauge-form pole orders on blowup charts");
    unsigned poles_n = 0;
    poles->add_option("--example", o.example, "ex1, ex2 or ex3");
    poles->add_option("--n", poles_n, "ex2 family member (default: run n = 1..5)");

    // weight
    auto* weight = app.add_subcommand("weight", "weight of one unimodular line triple");
    std::string triple;
    weight->add_option("--triple", triple, "columns 'a,b,c;d,e,f;g,h,i'")->required();
    weight->add_option("--eta", o.eta, "weight threshold in (0,1]");

    // oracle
    auto* oracle = app.add_subcommand("oracle", "exhaustive box-scan reference count");
    std::string oradius = "5";
    add_param_flags(oracle, o);
    oracle->add_option("--radius,-R", oradius, "height bound")->required();
    oracle->add_option("--box", o.oracle_box, "per-coordinate bound")->required();

    // pullback
    auto* pullback = app.add_subcommand("pullback", "run a chart-chain JSON file");
    std::string chain_path;
    std::vector<std::string> order_vars;
    pullback->add_option("--file", chain_path, "chart chain JSON")->required();
    pullback->add_option("--order", order_vars, "variables to report vanishing orders for");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1; // usage errors exit 1, --help exits 0
    }

    try {
        if (!o.config_path.empty())
            merge_config(o.config_path, o, nullptr);
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    hc_params params = to_capi(o);

    char* out = nullptr;
    hc_status st = HC_OK;

    if (*predict) {
        hc_model* model = nullptr;
        st = model_path.empty() ? hc_model_preset(&params, &model)
                                : hc_model_from_file(model_path.c_str(), &model);
        if (st != HC_OK)
            return report_error(st);
        st = hc_model_predict(model, &out);
        if (st != HC_OK) {
            hc_model_free(model);
            return report_error(st);
        }
        std::cout << take(out) << "\n";
        if (show_ratios) {
            st = hc_model_ratios(model, &out);
            if (st == HC_OK)
                std::cout << take(out) << "\n";
        }
        hc_model_free(model);
        return st == HC_OK ? 0 : report_error(st);
    }

    if (*count) {
        st = hc_count(&params, radius.c_str(), o.workers,
                      stream_path.empty() ? nullptr : stream_path.c_str(), &out);
        if (st != HC_OK)
            return report_error(st);
        std::cout << take(out) << "\n";
        return 0;
    }

    if (*ladder) {
        st = hc_ladder_csv(&params, r_min.c_str(), r_max.c_str(), steps, o.workers,
                           no_timing ? 0 : 1, &out);
        if (st != HC_OK)
            return report_error(st);
        std::string csv = take(out);
        if (out_path.empty())
            std::cout << csv;
        else
            write_file(out_path, csv);
        return 0;
    }

    if (*fit) {
        std::string csv = read_file(csv_path);
        st = hc_fit(&params, csv.c_str(), o.tolerance, &out);
        if (st != HC_OK)
            return report_error(st);
        std::string report = take(out);
        if (report_path.empty())
            std::cout << report << "\n";
        else
            write_file(report_path, report);
        if (!plot_data.empty()) {
            std::ostringstream data;
            std::istringstream in(csv);
            std::string line;
            std::getline(in, line); // header
            while (std::getline(in, line)) {
                auto c1 = line.find(',');
                auto c2 = line.find(',', c1 + 1);
                if (c1 != std::string::npos && c2 != std::string::npos)
                    data << line.substr(0, c1) << " " << line.substr(c1 + 1, c2 - c1 - 1)
                         << "\n";
            }
            write_file(plot_data, data.str());
            if (!plot_script_path.empty())
                write_file(plot_script_path,
                           "set logscale xy\nset xlabel 'R'\nset ylabel 'count'\n"
                           "plot '" + plot_data + "' using 1:2 with linespoints title 'census'\n");
        }
        if (strict && report.find("\"verdict\": \"inconsistent\"") != std::string::npos)
            return 2;
        return 0;
    }

    if (*poles) {
        st = hc_poles(o.example.c_str(), poles_n, &out);
        if (st != HC_OK)
            return report_error(st);
        std::string report = take(out);
        std::cout << report << "\n";
        return report.find("\"all_match\": true") != std::string::npos ? 0 : 2;
    }

    if (*weight) {
        double w = 0, area = 0;
        st = hc_weight(triple.c_str(), o.eta, &w, &area);
        if (st != HC_OK)
            return report_error(st);
        std::printf("{ \"weight\": %.10g, \"area\": %.10g }\n", w, area);
        return 0;
    }

    if (*oracle) {
        st = hc_oracle(&params, oradius.c_str(), o.oracle_box, o.workers, &out);
        if (st != HC_OK)
            return report_error(st);
        std::cout << take(out) << "\n";
        return 0;
    }

    if (*pullback) {
        std::string chain = read_file(chain_path);
        std::vector<const char*> ov;
        for (const auto& v : order_vars)
            ov.push_back(v.c_str());
        st = hc_chart_chain(chain.c_str(), ov.data(), ov.size(), &out);
        if (st != HC_OK)
            return report_error(st);
        std::cout << take(out) << "\n";
        return 0;
    }

    return 1;
}
