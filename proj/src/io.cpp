#include "superber/io.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <nlohmann/json.hpp>
#include <sstream>

#include "superber/errors.hpp"

namespace superber {

Json grassmann_to_json(const GrassmannElement& a) {
    std::vector<std::uint64_t> order;
    order.reserve(a.terms().size());
    for (const auto& [mask, c] : a.terms())
        order.push_back(mask);
    std::sort(order.begin(), order.end(), monomial_less);
    Json terms = Json::array();
    for (std::uint64_t mask : order) {
        Json t;
        t["gens"] = indices_from_mask(mask);
        t["coef"] = rational_to_string(a.terms().at(mask));
        terms.push_back(std::move(t));
    }
    Json j;
    j["terms"] = std::move(terms);
    return j;
}

GrassmannElement grassmann_from_json(const Json& j, int num_generators) {
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
        throw ParseError("grassmann element must be {\"terms\": [...]}");
    GrassmannElement a(num_generators);
    for (const Json& t : j["terms"]) {
        if (!t.contains("gens") || !t.contains("coef"))
            throw ParseError("grassmann term needs gens and coef");
        std::vector<int> gens = t["gens"].get<std::vector<int>>();
        Rational c = rational_from_string(t["coef"].get<std::string>());
        a += GrassmannElement::monomial(num_generators, gens, c);
    }
    return a;
}

Json supermatrix_to_json(const SuperMatrix& a) {
    Json j;
    j["m"] = a.m();
    j["n"] = a.n();
    j["gens"] = a.num_generators();
    Json rows = Json::array();
    for (int i = 0; i < a.dim(); ++i) {
        Json row = Json::array();
        for (int k = 0; k < a.dim(); ++k)
            row.push_back(grassmann_to_json(a.entry(i, k)));
        rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    return j;
}

SuperMatrix supermatrix_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("m") || !j.contains("n") || !j.contains("gens") ||
        !j.contains("entries"))
        throw ParseError("matrix file needs m, n, gens, entries");
    int m = j["m"].get<int>();
    int n = j["n"].get<int>();
    int gens = j["gens"].get<int>();
    if (m < 0 || n < 0)
        throw ParseError("negative dimension");
    const Json& rows = j["entries"];
    if (!rows.is_array() || int(rows.size()) != m + n)
        throw ParseError("entries must be an (m+n) x (m+n) grid");
    GMatrix grid(m + n, m + n, gens);
    for (int i = 0; i < m + n; ++i) {
        if (!rows[i].is_array() || int(rows[i].size()) != m + n)
            throw ParseError("entries must be an (m+n) x (m+n) grid");
        for (int k = 0; k < m + n; ++k)
            grid.at(i, k) = grassmann_from_json(rows[i][k], gens);
    }
    try {
        return SuperMatrix(m, n, std::move(grid));
    } catch (const ParityError& e) {
        throw ParseError(std::string("matrix violates block parity: ") + e.what());
    }
}

Json supertensor_to_json(const SuperTensor& t) {
    const Signature& sig = t.signature();
    Json j;
    j["signature"] = {{"l", sig.length()},
                      {"variance", sig.variance()},
                      {"m", sig.m},
                      {"n", sig.n}};
    Json terms = Json::array();
    for (const auto& [w, c] : t.terms()) {
        Json term;
        term["word"] = std::vector<int>(w.begin(), w.end());
        term["coef"] = grassmann_to_json(c);
        terms.push_back(std::move(term));
    }
    j["terms"] = std::move(terms);
    return j;
}

SuperTensor supertensor_from_json(const Json& j, int num_generators) {
    if (!j.is_object() || !j.contains("signature") || !j.contains("terms"))
        throw ParseError("tensor file needs signature and terms");
    const Json& s = j["signature"];
    int l = s.at("l").get<int>();
    std::string variance = s.at("variance").get<std::string>();
    int m = s.at("m").get<int>();
    int n = s.at("n").get<int>();
    if (int(variance.size()) != l)
        throw ParseError("variance length does not match l");
    int cov = 0;
    while (cov < l && variance[std::size_t(cov)] == 'c')
        ++cov;
    for (int k = cov; k < l; ++k)
        if (variance[std::size_t(k)] != 'u')
            throw ParseError("variance must be a covariant block then a contravariant block");
    SuperTensor t(Signature{m, n, cov, l - cov}, num_generators);
    for (const Json& term : j["terms"]) {
        std::vector<int> word = term.at("word").get<std::vector<int>>();
        Word w;
        for (int letter : word) {
            if (letter < 1 || letter > 255)
                throw ParseError("letter out of range");
            w.push_back(std::uint8_t(letter));
        }
        t.add_term(w, grassmann_from_json(term.at("coef"), num_generators));
    }
    return t;
}

Json check_report_to_json(const CheckReport& r) {
    Json j;
    j["check"] = r.check;
    j["m"] = r.m;
    j["n"] = r.n;
    j["berezinian"] = grassmann_to_json(r.berezinian);
    j["pass"] = r.pass;
    j["failures"] = r.failures;
    return j;
}

namespace {

std::string bits_text(const CanonicalPair& p) {
    if (p.m == 0 || p.n == 0)
        return "-";
    std::string s;
    for (int r = 0; r < p.m; ++r) {
        if (r)
            s += "/";
        for (int c = 0; c < p.n; ++c)
            s += char('0' + p.choice[std::size_t(r) * p.n + c]);
    }
    return s;
}

} // namespace

Json canonical_pair_to_json(const CanonicalPair& p, bool with_tensors) {
    Json j;
    j["index"] = p.index;
    j["bits"] = bits_text(p);
    j["kappa_h"] = p.kappa_h.str();
    j["kappa_g"] = p.kappa_g.str();
    j["rho"] = p.rho;
    j["alpha"] = rational_to_string(p.alpha);
    j["zeta"] = rational_to_string(p.zeta);
    j["zeta_prime"] = rational_to_string(p.zeta_prime);
    if (with_tensors) {
        j["h"] = supertensor_to_json(p.h);
        j["g"] = supertensor_to_json(p.g);
        j["h_prime"] = supertensor_to_json(p.h_prime);
        j["g_star_prime"] = supertensor_to_json(star_prime(p, TensorKind::G));
        j["h_star_prime"] = supertensor_to_json(star_prime(p, TensorKind::H));
    }
    return j;
}

std::string canon_table_text(const std::vector<CanonicalPair>& pairs) {
    std::ostringstream out;
    out << std::left << std::setw(6) << "index" << std::setw(12) << "bits" << std::setw(9)
        << "kappa_h" << std::setw(9) << "kappa_g" << std::setw(5) << "rho" << std::setw(8)
        << "alpha" << std::setw(10) << "zeta" << std::setw(10) << "zeta'" << "\n";
    for (const CanonicalPair& p : pairs) {
        out << std::left << std::setw(6) << p.index << std::setw(12) << bits_text(p)
            << std::setw(9) << p.kappa_h.str() << std::setw(9) << p.kappa_g.str()
            << std::setw(5) << p.rho << std::setw(8) << rational_to_string(p.alpha)
            << std::setw(10) << rational_to_string(p.zeta) << std::setw(10)
            << rational_to_string(p.zeta_prime) << "\n";
    }
    return out.str();
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const std::exception& e) {
        throw ParseError("invalid JSON in " + path + ": " + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error("cannot write " + path);
    out << text;
}

} // namespace superber
