#include "cohomotopy/simplicial/complex.hpp"

#include "cohomotopy/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

namespace cohomotopy::simplicial {

namespace {

constexpr std::size_t kMaxFacetSize = 16;

int find_root(std::vector<int>& parent, int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
        parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
        v = parent[static_cast<std::size_t>(v)];
    }
    return v;
}

std::string basename_of(const std::string& path) {
    auto slash = path.find_last_of('/');
    return slash == std::string::npos ? path : path.substr(slash + 1);
}

SimplicialComplex parse_json(const std::string& text, std::string name) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        raise(ErrorCode::ParseError, std::string("malformed JSON complex: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("facets") || !doc["facets"].is_array())
        raise(ErrorCode::ParseError, "JSON complex needs a \"facets\" array");
    std::vector<std::vector<long long>> facets;
    try {
        for (const auto& f : doc["facets"]) facets.push_back(f.get<std::vector<long long>>());
    } catch (const nlohmann::json::exception&) {
        raise(ErrorCode::ParseError, "facets must be arrays of integers");
    }
    if (doc.contains("vertices")) {
        std::vector<long long> declared;
        const auto& v = doc["vertices"];
        if (v.is_number_integer()) {
            declared.resize(v.get<std::size_t>());
            std::iota(declared.begin(), declared.end(), 0LL);
        } else if (v.is_array()) {
            try {
                declared = v.get<std::vector<long long>>();
            } catch (const nlohmann::json::exception&) {
                raise(ErrorCode::ParseError, "vertices must be integers");
            }
        } else {
            raise(ErrorCode::ParseError, "vertices must be a count or a list");
        }
        std::set<long long> known(declared.begin(), declared.end());
        std::set<long long> used;
        for (const auto& f : facets)
            for (auto x : f) {
                if (!known.count(x)) raise(ErrorCode::ParseError, "facet uses undeclared vertex " + std::to_string(x));
                used.insert(x);
            }
        for (auto x : known)
            if (!used.count(x)) facets.push_back({x});
    }
    if (doc.contains("name") && doc["name"].is_string()) name = doc["name"].get<std::string>();
    return SimplicialComplex::from_facets(facets, std::move(name));
}

} // namespace

SimplicialComplex SimplicialComplex::from_facets(const std::vector<std::vector<long long>>& facets, std::string name) {
    SimplicialComplex k;
    k.name_ = std::move(name);

    std::set<long long> labels;
    for (const auto& f : facets) {
        if (f.empty()) raise(ErrorCode::ParseError, "empty facet");
        if (f.size() > kMaxFacetSize) raise(ErrorCode::TooLarge, "facet with more than 16 vertices");
        std::set<long long> distinct(f.begin(), f.end());
        if (distinct.size() != f.size()) raise(ErrorCode::ParseError, "facet with a repeated vertex");
        labels.insert(f.begin(), f.end());
    }
    k.labels_.assign(labels.begin(), labels.end());

    std::vector<std::set<Simplex>> faces;
    for (const auto& f : facets) {
        Simplex s;
        for (auto x : f)
            s.push_back(static_cast<int>(std::lower_bound(k.labels_.begin(), k.labels_.end(), x) - k.labels_.begin()));
        std::sort(s.begin(), s.end());
        if (faces.size() < s.size()) faces.resize(s.size());
        const std::size_t subsets = std::size_t{1} << s.size();
        for (std::size_t mask = 1; mask < subsets; ++mask) {
            Simplex t;
            for (std::size_t b = 0; b < s.size(); ++b)
                if (mask & (std::size_t{1} << b)) t.push_back(s[b]);
            faces[t.size() - 1].insert(std::move(t));
        }
    }

    k.simplices_.resize(faces.size());
    k.index_.resize(faces.size());
    for (std::size_t q = 0; q < faces.size(); ++q) {
        k.simplices_[q].assign(faces[q].begin(), faces[q].end());
        for (std::size_t j = 0; j < k.simplices_[q].size(); ++j) k.index_[q].emplace(k.simplices_[q][j], j);
    }

    k.faces_.resize(faces.size());
    for (std::size_t q = 1; q < faces.size(); ++q) {
        auto& table = k.faces_[q];
        table.reserve(k.simplices_[q].size() * (q + 1));
        for (const auto& s : k.simplices_[q])
            for (std::size_t i = 0; i <= q; ++i) {
                Simplex t = s;
                t.erase(t.begin() + static_cast<std::ptrdiff_t>(i));
                table.push_back(k.index_[q - 1].at(t));
            }
    }

    const int v = static_cast<int>(k.labels_.size());
    if (v > 0) {
        std::vector<int> parent(static_cast<std::size_t>(v));
        std::iota(parent.begin(), parent.end(), 0);
        if (k.simplices_.size() > 1)
            for (const auto& e : k.simplices_[1]) parent[static_cast<std::size_t>(find_root(parent, e[0]))] = find_root(parent, e[1]);
        int root = find_root(parent, 0);
        for (int x = 1; x < v; ++x)
            if (find_root(parent, x) != root) raise(ErrorCode::NotConnected, "complex is not connected");
    }

    std::vector<std::size_t> ranks;
    for (const auto& s : k.simplices_) ranks.push_back(s.size());
    std::vector<IntMatrix> coboundaries;
    for (std::size_t q = 0; q + 1 < ranks.size(); ++q) {
        IntMatrix d(ranks[q + 1], ranks[q]);
        for (std::size_t j = 0; j < ranks[q + 1]; ++j)
            for (std::size_t i = 0; i <= q + 1; ++i) d(j, k.face(static_cast<int>(q + 1), j, i)) += (i % 2 == 0) ? 1 : -1;
        coboundaries.push_back(std::move(d));
    }
    k.cochains_ = algebra::CochainComplex(std::move(ranks), std::move(coboundaries));
    return k;
}

std::size_t SimplicialComplex::count(int degree) const {
    if (degree < 0 || degree > dimension()) return 0;
    return simplices_[static_cast<std::size_t>(degree)].size();
}

const std::vector<Simplex>& SimplicialComplex::simplices(int degree) const {
    static const std::vector<Simplex> none;
    if (degree < 0 || degree > dimension()) return none;
    return simplices_[static_cast<std::size_t>(degree)];
}

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex& s) const {
    if (s.empty() || s.size() > simplices_.size()) return std::nullopt;
    const auto& idx = index_[s.size() - 1];
    auto it = idx.find(s);
    if (it == idx.end()) return std::nullopt;
    return it->second;
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
    std::vector<std::size_t> f;
    for (const auto& s : simplices_) f.push_back(s.size());
    return f;
}

long long SimplicialComplex::euler_characteristic() const {
    long long chi = 0;
    for (std::size_t q = 0; q < simplices_.size(); ++q)
        chi += (q % 2 == 0 ? 1 : -1) * static_cast<long long>(simplices_[q].size());
    return chi;
}

std::vector<Simplex> SimplicialComplex::facets() const {
    std::vector<Simplex> out;
    for (std::size_t q = 0; q < simplices_.size(); ++q) {
        std::vector<bool> covered(simplices_[q].size(), false);
        if (q + 1 < simplices_.size()) {
            const auto& table = faces_[q + 1];
            for (auto f : table) covered[f] = true;
        }
        for (std::size_t j = 0; j < simplices_[q].size(); ++j)
            if (!covered[j]) out.push_back(simplices_[q][j]);
    }
    return out;
}

IntMatrix SimplicialComplex::coboundary_matrix(int n, const Coefficients& coeffs) const {
    if (n < 0 || n >= dimension())
        raise(ErrorCode::DegreeOutOfRange,
              "coboundary degree " + std::to_string(n) + " outside [0, " + std::to_string(dimension()) + ")");
    IntMatrix d = cochains_.coboundary(n);
    if (coeffs.is_modular()) d.reduce_mod(coeffs.modulus());
    return d;
}

SimplicialComplex parse_complex(const std::string& text, std::string name) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return parse_json(text, std::move(name));

    std::vector<std::vector<long long>> facets;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::istringstream tokens(line);
        std::string tok;
        std::vector<long long> facet;
        while (tokens >> tok) {
            long long value = 0;
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
            if (ec != std::errc() || ptr != tok.data() + tok.size())
                raise(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": bad vertex \"" + tok + "\"");
            facet.push_back(value);
        }
        facets.push_back(std::move(facet));
    }
    return SimplicialComplex::from_facets(facets, std::move(name));
}

SimplicialComplex load_complex(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise(ErrorCode::ParseError, "cannot read " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_complex(buf.str(), basename_of(path));
}

SimplicialComplex suspension(const SimplicialComplex& k) {
    long long top = k.labels().empty() ? -1 : k.labels().back();
    std::vector<std::vector<long long>> facets;
    for (const auto& f : k.facets()) {
        std::vector<long long> lifted;
        for (int x : f) lifted.push_back(k.label(x));
        for (long long apex : {top + 1, top + 2}) {
            auto g = lifted;
            g.push_back(apex);
            facets.push_back(std::move(g));
        }
    }
    if (facets.empty()) facets = {{0}, {1}};
    return SimplicialComplex::from_facets(facets, "susp(" + k.name() + ")");
}

IntMatrix restriction_matrix(const SimplicialComplex& x, const SimplicialComplex& a, int degree) {
    IntMatrix r(a.count(degree), x.count(degree));
    const auto& xl = x.labels();
    for (std::size_t j = 0; j < a.count(degree); ++j) {
        Simplex s;
        for (int v : a.simplices(degree)[j]) {
            auto it = std::lower_bound(xl.begin(), xl.end(), a.label(v));
            if (it == xl.end() || *it != a.label(v))
                raise(ErrorCode::InvalidArgument, "vertex " + std::to_string(a.label(v)) + " is not in the ambient complex");
            s.push_back(static_cast<int>(it - xl.begin()));
        }
        auto idx = x.index_of(s);
        if (!idx) raise(ErrorCode::InvalidArgument, "simplex of the subcomplex is missing from the ambient complex");
        r(j, *idx) = 1;
    }
    return r;
}

} // namespace cohomotopy::simplicial
