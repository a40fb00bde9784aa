#include "gencliff/io.hpp"

#include <fstream>
#include <sstream>

namespace gencliff {

namespace {

std::string trim(const std::string& s)
{
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos)
        return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

int parse_positive(const std::string& text, const char* what, int lineno)
{
    if (text.empty() || text.size() > 6)
        fail_at(Errc::ParseError, std::string("bad ") + what + " '" + text + "'", lineno, 1);
    for (char c : text)
        if (c < '0' || c > '9')
            fail_at(Errc::ParseError, std::string("bad ") + what + " '" + text + "'", lineno, 1);
    int v = std::stoi(text);
    if (v < 1)
        fail_at(Errc::ParseError, std::string(what) + " must be >= 1", lineno, 1);
    return v;
}

// keys of the shape name[i] or name[i][j]
bool match_indexed(const std::string& key, const std::string& name, std::vector<int>& indices)
{
    if (key.size() <= name.size() || key.compare(0, name.size(), name) != 0)
        return false;
    size_t pos = name.size();
    indices.clear();
    while (pos < key.size()) {
        if (key[pos] != '[')
            return false;
        size_t close = key.find(']', pos);
        if (close == std::string::npos)
            return false;
        std::string digits = key.substr(pos + 1, close - pos - 1);
        if (digits.empty())
            return false;
        for (char c : digits)
            if (c < '0' || c > '9')
                return false;
        indices.push_back(std::stoi(digits));
        pos = close + 1;
    }
    return pos == key.size() && !indices.empty();
}

}  // namespace

InputFile parse_input_text(const std::string& text)
{
    InputFile file;
    bool have_ring = false, have_vars = false, have_d = false;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = trim(raw);
        if (line.empty() || line[0] == '#')
            continue;
        size_t eq = line.find('=');
        if (eq == std::string::npos)
            fail_at(Errc::ParseError, "expected key = value", lineno, 1);
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key == "ring") {
            file.ring = make_ring(value);
            have_ring = true;
        }
        else if (key == "vars") {
            std::vector<std::string> names;
            std::string cur;
            for (char c : value + ",") {
                if (c == ',') {
                    std::string name = trim(cur);
                    if (!name.empty())
                        names.push_back(name);
                    cur.clear();
                }
                else
                    cur += c;
            }
            if (names.empty())
                fail_at(Errc::ParseError, "vars must list at least one variable", lineno, 1);
            file.xvars = Alphabet(std::move(names));
            have_vars = true;
        }
        else if (key == "m") {
            file.m = parse_positive(value, "m", lineno);
        }
        else if (key == "d") {
            file.d = parse_positive(value, "d", lineno);
            have_d = true;
        }
        else if (key == "mode") {
            if (value == "ordered")
                file.mode = XMode::Ordered;
            else if (value == "commuting")
                file.mode = XMode::Commuting;
            else
                fail_at(Errc::ParseError, "mode must be ordered or commuting", lineno, 1);
        }
        else {
            std::vector<int> idx;
            if (match_indexed(key, "f", idx) && idx.size() == 1) {
                if (idx[0] < 1)
                    fail_at(Errc::ParseError, "form index must be >= 1", lineno, 1);
                file.forms[idx[0]] = value;
            }
            else if (match_indexed(key, "psi", idx) && idx.size() == 2) {
                if (idx[0] < 1 || idx[1] < 1)
                    fail_at(Errc::ParseError, "matrix indices are 1-based", lineno, 1);
                file.bilinear[{idx[0], idx[1]}] = value;
            }
            else
                fail_at(Errc::ParseError, "unknown key '" + key + "'", lineno, 1);
        }
    }
    if (!have_ring)
        fail(Errc::ParseError, "missing 'ring' entry");
    if (!have_vars)
        fail(Errc::ParseError, "missing 'vars' entry");
    if (!have_d && !file.forms.empty())
        file.d = file.forms.rbegin()->first;
    return file;
}

InputFile read_input_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        fail(Errc::InvalidInput, "cannot open input file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_input_text(buf.str());
}

CliffordInput to_clifford_input(const InputFile& file, std::optional<XMode> mode_override)
{
    for (const auto& [l, text] : file.forms)
        if (l > file.d)
            fail(Errc::InvalidInput, "form index f[" + std::to_string(l) + "] exceeds d = " + std::to_string(file.d));
    std::vector<std::string> texts(size_t(file.d));
    for (const auto& [l, text] : file.forms)
        texts[size_t(l) - 1] = text;
    return make_clifford_input(file.ring, file.xvars, file.m, file.d, mode_override.value_or(file.mode), texts);
}

std::vector<std::vector<Scalar>> to_bilinear_matrix(const InputFile& file)
{
    int n = int(file.xvars.size());
    std::vector<std::vector<Scalar>> out(size_t(n), std::vector<Scalar>(size_t(n), Scalar::zero(file.ring)));
    CtxPtr ctx = make_context(file.ring, XMode::Commuting, Alphabet{}, Alphabet{});
    for (const auto& [ij, text] : file.bilinear) {
        if (ij.first > n || ij.second > n)
            fail(Errc::InvalidInput, "psi index out of range");
        NcPoly value = parse_poly(text, ctx);
        out[size_t(ij.first) - 1][size_t(ij.second) - 1] = value.coeff(MixedMonomial{});
    }
    return out;
}

std::string format_presentation(const Presentation& p)
{
    std::string out;
    out += "ring = " + p.ring.spec() + "\n";
    out += "generators =";
    for (const auto& name : p.generators.names)
        out += " " + name;
    out += "\n";
    for (const auto& rel : p.relations)
        out += "rel: " + format_poly(rel) + "\n";
    return out;
}

std::string format_comparison(const ComparisonReport& report)
{
    std::string out;
    for (const auto& e : report.psi_in_kl)
        out += "psi -> kl: " + e.relation + ": " + e.verdict.str() + "\n";
    for (const auto& e : report.kl_in_psi)
        out += "kl -> psi: " + e.relation + ": " + e.verdict.str() + "\n";
    out += "verdict: " + report.tag_str() + "\n";
    return out;
}

std::string format_dimensions(const DimensionCounts& counts)
{
    std::string out;
    for (size_t k = 0; k < counts.per_degree.size(); ++k)
        out += "deg " + std::to_string(k) + ": " + std::to_string(counts.per_degree[k]) + "\n";
    out += "total " + std::to_string(counts.total());
    if (!counts.exact)
        out += " (upper bound)";
    out += "\n";
    return out;
}

}  // namespace gencliff
