#include "clemens.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>

namespace hc {

using nlohmann::json;

DivisorModel::DivisorModel(std::vector<DivisorComponent> components,
                           std::vector<std::set<int>> maximal_faces,
                           std::set<int> b_set)
    : components_(std::move(components)), b_set_(std::move(b_set))
{
    if (components_.empty())
        throw std::invalid_argument("divisor model needs at least one component");
    const int n = int(components_.size());
    for (const auto& c : components_) {
        if (c.lambda < 0)
            throw std::invalid_argument("lambda must be nonnegative");
        if (c.d > 0 && c.lambda == 0)
            throw std::invalid_argument(
                "component '" + c.name + "' has d > 0 but lambda = 0; height is not proper");
    }
    for (int i : b_set_)
        if (i < 1 || i > n)
            throw std::invalid_argument("b_set index out of range");

    // close the listed faces downward; every component is a face by itself
    for (int i = 1; i <= n; ++i)
        faces_.insert({i});
    for (const auto& f : maximal_faces) {
        for (int i : f)
            if (i < 1 || i > n)
                throw std::invalid_argument("face index out of range");
        if (f.empty())
            continue;
        std::vector<int> idx(f.begin(), f.end());
        const size_t m = idx.size();
        for (size_t mask = 1; mask < (size_t(1) << m); ++mask) {
            std::set<int> sub;
            for (size_t j = 0; j < m; ++j)
                if (mask & (size_t(1) << j))
                    sub.insert(idx[j]);
            faces_.insert(std::move(sub));
        }
    }
}

GrowthPrediction predict(const DivisorModel& model)
{
    const auto& comps = model.components();
    bool any_lambda = false;
    Rat a;
    bool first = true;
    for (const auto& c : comps) {
        if (c.lambda == 0)
            continue;
        any_lambda = true;
        Rat ratio = Rat(c.d - 1) / c.lambda;
        ratio.canonicalize();
        if (first || ratio > a) {
            a = ratio;
            first = false;
        }
    }
    if (!any_lambda)
        throw std::invalid_argument("height not proper on boundary");
    if (a < 0)
        throw std::invalid_argument("negative growth exponent is outside the predicted regime");

    GrowthPrediction p;
    p.a = a;
    for (size_t i = 0; i < comps.size(); ++i) {
        if (comps[i].lambda == 0)
            continue;
        Rat ratio = Rat(comps[i].d - 1) / comps[i].lambda;
        if (ratio == a)
            p.attaining.insert(int(i + 1));
    }

    int b = 1;
    std::vector<std::set<int>> maximal_attaining;
    for (const auto& f : model.faces()) {
        bool inside = std::all_of(f.begin(), f.end(),
                                  [&](int i) { return p.attaining.count(i) > 0; });
        if (!inside)
            continue;
        if (int(f.size()) > b)
            b = int(f.size());
    }
    p.b = b;
    for (const auto& f : model.faces()) {
        if (int(f.size()) != b)
            continue;
        if (std::all_of(f.begin(), f.end(),
                        [&](int i) { return p.attaining.count(i) > 0; }))
            maximal_attaining.push_back(f);
    }

    if (model.b_set().empty()) {
        p.focusing = Focusing::not_applicable;
    } else {
        // the limit measure escapes the distinguished locus iff no face of
        // top attaining dimension touches it
        bool touches = false;
        for (const auto& f : maximal_attaining)
            for (int i : f)
                if (model.b_set().count(i)) {
                    touches = true;
                    break;
                }
        p.focusing = touches ? Focusing::no : Focusing::yes;
    }

    std::ostringstream law;
    if (p.a == 0) {
        law << "c*(log R)^" << p.b;
    } else {
        law << "c*R^(" << rat_str(p.a) << ")";
        if (p.b > 1)
            law << "*(log R)^" << (p.b - 1);
    }
    p.law = law.str();
    return p;
}

std::vector<std::optional<Rat>> ratio_vector(const DivisorModel& model)
{
    std::vector<std::optional<Rat>> out;
    for (const auto& c : model.components()) {
        if (c.lambda == 0) {
            out.push_back(std::nullopt);
        } else {
            Rat r = Rat(c.d - 1) / c.lambda;
            r.canonicalize();
            out.push_back(r);
        }
    }
    return out;
}

DivisorModel preset_ex1()
{
    // boundary chain of the resolved quadric-pair compactification; the
    // exceptional component E1 meets everything, the rest form a chain
    std::vector<DivisorComponent> comps = {
        {"E1++", 2, Rat(1)},     {"D210+++", 1, Rat(1)}, {"E3^2", 3, Rat(2)},
        {"(E2^2)+", 5, Rat(3)},  {"E3^1", 3, Rat(1)},    {"(E2^1)+", 7, Rat(3)},
        {"E3^0", 5, Rat(2)},     {"D022+++", 3, Rat(1)},
    };
    std::vector<std::set<int>> faces;
    for (int i = 2; i <= 7; ++i)
        faces.push_back({1, i, i + 1});
    faces.push_back({1, 2});
    faces.push_back({1, 8});
    return DivisorModel(std::move(comps), std::move(faces), {});
}

DivisorModel preset_ex2(unsigned n, unsigned lambda1, unsigned lambda2)
{
    if (n < 1)
        throw std::invalid_argument("n must be >= 1");
    if (lambda1 == 0 || lambda2 == 0)
        throw std::invalid_argument("multiplicities must be positive");
    std::vector<DivisorComponent> comps = {
        {"D1", long(n) + 1, Rat(lambda1)},
        {"D2", long(n) + 1, Rat(lambda2)},
    };
    return DivisorModel(std::move(comps), {{1, 2}}, {});
}

DivisorModel ex3_shape_with_lambdas(const std::array<Rat, 5>& lambdas)
{
    std::vector<DivisorComponent> comps = {
        {"E", 9, lambdas[0]},        {"D12,3", 6, lambdas[1]},
        {"D13,2", 6, lambdas[2]},    {"D23,1", 6, lambdas[3]},
        {"(D123^2)+", 9, lambdas[4]},
    };
    // each transform D_ij,k meets exactly E and (D123^2)+, transversally
    std::vector<std::set<int>> faces = {{2, 1, 5}, {3, 1, 5}, {4, 1, 5}};
    return DivisorModel(std::move(comps), std::move(faces), {1, 5});
}

DivisorModel preset_ex3(unsigned kappa1, unsigned kappa2)
{
    if (kappa1 == 0 || kappa2 == 0)
        throw std::invalid_argument("multiplicities must be positive");
    // divisor of the height: kappa1 * (3,1,1,1,0) + kappa2 * (0,1,1,1,3)
    Rat k1(kappa1), k2(kappa2);
    return ex3_shape_with_lambdas({3 * k1, k1 + k2, k1 + k2, k1 + k2, 3 * k2});
}

namespace {

json model_to_json_obj(const DivisorModel& m)
{
    json j;
    j["components"] = json::array();
    for (const auto& c : m.components())
        j["components"].push_back({{"name", c.name}, {"d", c.d}, {"lambda", rat_str(c.lambda)}});
    // emit maximal faces only
    std::vector<std::set<int>> maximal;
    for (const auto& f : m.faces()) {
        bool is_max = true;
        for (const auto& g : m.faces())
            if (f != g && std::includes(g.begin(), g.end(), f.begin(), f.end())) {
                is_max = false;
                break;
            }
        if (is_max)
            maximal.push_back(f);
    }
    j["faces"] = json::array();
    for (const auto& f : maximal)
        j["faces"].push_back(std::vector<int>(f.begin(), f.end()));
    j["b_set"] = std::vector<int>(m.b_set().begin(), m.b_set().end());
    return j;
}

} // namespace

std::string DivisorModel::to_json() const
{
    return model_to_json_obj(*this).dump(2);
}

DivisorModel DivisorModel::from_json(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("divisor model is not valid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("components") || !j["components"].is_array())
        throw std::invalid_argument("divisor model needs a 'components' array");
    std::vector<DivisorComponent> comps;
    for (const auto& c : j["components"]) {
        DivisorComponent dc;
        dc.name = c.value("name", "D" + std::to_string(comps.size() + 1));
        if (!c.contains("d") || !c["d"].is_number_integer())
            throw std::invalid_argument("component '" + dc.name + "' needs an integer 'd'");
        dc.d = c["d"].get<long>();
        if (!c.contains("lambda"))
            throw std::invalid_argument("component '" + dc.name + "' needs a 'lambda'");
        if (c["lambda"].is_string())
            dc.lambda = parse_rat(c["lambda"].get<std::string>());
        else if (c["lambda"].is_number_integer())
            dc.lambda = Rat(c["lambda"].get<long>());
        else
            throw std::invalid_argument("lambda must be an integer or a 'p/q' string");
        comps.push_back(std::move(dc));
    }
    std::vector<std::set<int>> faces;
    if (j.contains("faces")) {
        if (!j["faces"].is_array())
            throw std::invalid_argument("'faces' must be an array of index lists");
        for (const auto& f : j["faces"]) {
            if (!f.is_array())
                throw std::invalid_argument("each face must be an index list");
            std::set<int> fs;
            for (const auto& i : f) {
                if (!i.is_number_integer())
                    throw std::invalid_argument("face indices must be integers");
                fs.insert(i.get<int>());
            }
            faces.push_back(std::move(fs));
        }
    }
    std::set<int> b_set;
    if (j.contains("b_set"))
        for (const auto& i : j["b_set"])
            b_set.insert(i.get<int>());
    return DivisorModel(std::move(comps), std::move(faces), std::move(b_set));
}

DivisorModel DivisorModel::from_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open divisor model file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_json(buf.str());
}

std::string prediction_to_json(const GrowthPrediction& p)
{
    json j;
    j["a"] = rat_str(p.a);
    j["b"] = p.b;
    j["attaining"] = std::vector<int>(p.attaining.begin(), p.attaining.end());
    if (p.focusing == Focusing::not_applicable)
        j["focusing"] = "n/a";
    else
        j["focusing"] = (p.focusing == Focusing::yes);
    j["law"] = p.law;
    if (!p.notes.empty())
        j["notes"] = p.notes;
    return j.dump(2);
}

} // namespace hc
