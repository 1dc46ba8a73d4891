#include "canonica/format.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace canonica {

namespace {

std::string entry_text(const LaurentPoly& p) { return p.is_zero() ? "0" : format_coefficient(p); }

std::string basis_names(const std::string& family) {
    if (family == "l") return "M_A in L_B";
    if (family == "lstar") return "M*_A in L*_B";
    if (family == "k") return "N_A in K_B";
    if (family == "kstar") return "N*_A in K*_B";
    return "L_B in V_A";
}

const char* kRowLabels = "# row tableaux: rows bottom to top separated by ';', each row left to right";
const char* kColLabels = "# column tableaux: columns left to right separated by ';', each column bottom to top";

std::vector<std::string> header(const std::string& family, const Weight& mu, const Weight& nu) {
    std::vector<std::string> out;
    out.push_back("# " + family + " transition, mu = " + mu.to_string() + ", nu = " + nu.to_string());
    out.push_back("# entry (A,B) is the coefficient of " + basis_names(family) + ", \".\" is zero");
    return out;
}

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

OutputFormat parse_format(std::string_view name) {
    if (name == "text") return OutputFormat::Text;
    if (name == "csv") return OutputFormat::Csv;
    if (name == "json") return OutputFormat::Json;
    throw std::invalid_argument("unknown format: " + std::string(name));
}

std::string format_coefficient(const LaurentPoly& p) {
    std::string s = p.to_string();
    std::string out;
    for (char c : s)
        if (c != '*') out += c;
    return out;
}

LabeledMatrix labeled(const TransitionMatrix& t) {
    LabeledMatrix m;
    m.family = family_name(t.kind);
    m.mu = t.mu;
    m.nu = t.nu;
    m.comments = header(m.family, t.mu, t.nu);
    m.comments.push_back(is_row_kind(t.kind) ? kRowLabels : kColLabels);
    for (const auto& A : t.labels) m.row_labels.push_back(A.to_string());
    m.col_labels = m.row_labels;
    m.entries = t.entries;
    return m;
}

LabeledMatrix labeled(const IrrepMatrix& t) {
    LabeledMatrix m;
    m.family = "standard-to-dual-canonical";
    m.mu = t.mu;
    m.nu = t.nu;
    m.comments = header(m.family, t.mu, t.nu);
    m.comments.push_back("# rows: column tableaux A in Std(mu,nu), each column bottom to top");
    m.comments.push_back("# cols: row tableaux B in Dom(mu',nu), rows bottom to top, each row left to right");
    for (const auto& A : t.row_labels) m.row_labels.push_back(A.to_string());
    for (const auto& B : t.col_labels) m.col_labels.push_back(B.to_string());
    m.entries = t.entries;
    return m;
}

LabeledMatrix restrict_to(const LabeledMatrix& m, const std::vector<std::string>& labels) {
    std::vector<std::size_t> idx;
    for (const auto& l : labels) {
        std::size_t i = 0;
        while (i < m.row_labels.size() && m.row_labels[i] != l) ++i;
        if (i == m.row_labels.size()) throw std::invalid_argument("label not in the matrix: " + l);
        idx.push_back(i);
    }
    LabeledMatrix out = m;
    out.row_labels.clear();
    out.col_labels.clear();
    out.entries.clear();
    for (std::size_t i : idx) {
        out.row_labels.push_back(m.row_labels[i]);
        out.col_labels.push_back(m.col_labels[i]);
        std::vector<LaurentPoly> row;
        for (std::size_t j : idx) row.push_back(m.entries[i][j]);
        out.entries.push_back(std::move(row));
    }
    return out;
}

std::string format_text(const LabeledMatrix& m) {
    std::ostringstream os;
    for (const auto& c : m.comments) os << c << '\n';
    os << "mu " << m.mu.to_string() << '\n' << "nu " << m.nu.to_string() << '\n';
    if (m.row_labels == m.col_labels) {
        os << "labels\n";
        for (const auto& l : m.row_labels) os << l << '\n';
    } else {
        os << "rows\n";
        for (const auto& l : m.row_labels) os << l << '\n';
        os << "cols\n";
        for (const auto& l : m.col_labels) os << l << '\n';
    }
    os << "matrix\n";
    for (const auto& row : m.entries) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) os << ' ';
            os << (row[j].is_zero() ? "." : format_coefficient(row[j]));
        }
        os << '\n';
    }
    return os.str();
}

std::string format_csv(const LabeledMatrix& m) {
    std::ostringstream os;
    os << "\"\"";
    for (const auto& l : m.col_labels) os << ',' << csv_quote(l);
    os << '\n';
    for (std::size_t i = 0; i < m.entries.size(); ++i) {
        os << csv_quote(m.row_labels[i]);
        for (const auto& e : m.entries[i]) os << ',' << entry_text(e);
        os << '\n';
    }
    return os.str();
}

std::string format_json(const LabeledMatrix& m) {
    nlohmann::ordered_json j;
    j["schema"] = "canonica/1";
    j["family"] = m.family;
    j["mu"] = m.mu.parts;
    j["nu"] = m.nu.parts;
    j["rows"] = m.row_labels;
    j["cols"] = m.col_labels;
    auto entries = nlohmann::ordered_json::array();
    for (const auto& row : m.entries) {
        auto r = nlohmann::ordered_json::array();
        for (const auto& e : row) r.push_back(entry_text(e));
        entries.push_back(std::move(r));
    }
    j["entries"] = std::move(entries);
    return j.dump(1) + "\n";
}

std::string format_matrix(const LabeledMatrix& m, OutputFormat f) {
    switch (f) {
        case OutputFormat::Text: return format_text(m);
        case OutputFormat::Csv: return format_csv(m);
        case OutputFormat::Json: return format_json(m);
    }
    throw std::logic_error("format_matrix: bad format");
}

}  // namespace canonica
