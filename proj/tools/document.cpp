#include "document.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace orthoform::cli {

namespace {

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
        ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
        --e;
    return std::string(s.substr(b, e - b));
}

std::string strip_comment(const std::string& line) {
    auto hash = line.find('#');
    return hash == std::string::npos ? line : line.substr(0, hash);
}

std::vector<std::string> split_tokens(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
            if (!cur.empty())
                out.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty())
        out.push_back(std::move(cur));
    return out;
}

bool is_name(const std::string& s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
        return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''))
            return false;
    return true;
}

// "(a,b),(c,d)" -> rows of literals.
std::vector<std::vector<std::string>> parse_tuples(const std::string& text, std::size_t line) {
    std::vector<std::vector<std::string>> out;
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ','))
            ++pos;
    };
    skip();
    while (pos < text.size()) {
        if (text[pos] != '(')
            throw ParseError("expected '(' in vector list", line);
        auto close = text.find(')', pos);
        if (close == std::string::npos)
            throw ParseError("unclosed '(' in vector list", line);
        out.push_back(split_tokens(text.substr(pos + 1, close - pos - 1)));
        pos = close + 1;
        skip();
    }
    return out;
}

Vector parse_vector(const std::vector<std::string>& lits, const FieldDescriptor& f, std::size_t dim,
                    std::size_t line) {
    if (lits.size() != dim)
        throw ParseError("vector has " + std::to_string(lits.size()) + " coordinates, expected " +
                             std::to_string(dim),
                         line);
    std::vector<Scalar> c;
    try {
        for (const auto& l : lits)
            c.push_back(parse_scalar(l, f));
    } catch (const ParseError& e) {
        throw ParseError(e.what(), line);
    }
    return Vector(f, std::move(c));
}

mpq_class parse_weight(const std::string& text, std::size_t line) {
    mpq_class w;
    try {
        w = mpq_class(text);
    } catch (const std::invalid_argument&) {
        throw ParseError("bad mixture weight '" + text + "'", line);
    }
    if (w.get_den() == 0)
        throw ParseError("bad mixture weight '" + text + "'", line);
    w.canonicalize();
    return w;
}

} // namespace

FieldDescriptor parse_field(std::string_view raw) {
    std::string t = trim(raw);
    if (t == "Q" || t == "rational")
        return FieldDescriptor::rational();
    if (t == "Q(i)" || t == "gaussian")
        return FieldDescriptor::gaussian();
    if (t == "H(Q)" || t == "H" || t == "quaternion")
        return FieldDescriptor::quaternion();
    if (t.rfind("GF(", 0) == 0 && t.size() > 4 && t.back() == ')') {
        std::string digits = t.substr(3, t.size() - 4);
        if (!digits.empty() && digits.size() < 10 &&
            std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
            try {
                return FieldDescriptor::prime(static_cast<std::uint32_t>(std::stoul(digits)));
            } catch (const DomainError& e) {
                throw ParseError(e.what());
            }
        }
    }
    throw ParseError("unknown field '" + t + "' (expected Q, Q(i), H(Q) or GF(p))");
}

const Subspace& Document::subspace(const std::string& name) const {
    for (const auto& [n, s] : subspaces)
        if (n == name)
            return s;
    throw DomainError("document has no subspace named '" + name + "'");
}

bool Document::has_subspace(const std::string& name) const {
    for (const auto& entry : subspaces)
        if (entry.first == name)
            return true;
    return false;
}

Document parse_document(std::string_view text) {
    std::vector<std::string> lines;
    {
        std::istringstream in{std::string(text)};
        std::string l;
        while (std::getline(in, l))
            lines.push_back(detail::normalize_minus(strip_comment(l)));
    }

    std::optional<FieldDescriptor> field;
    std::optional<std::size_t> dim;
    struct Pending {
        std::string key, name, body;
        std::size_t line;
    };
    std::vector<Pending> entries;
    std::string gram_spec;
    std::vector<std::pair<std::vector<std::string>, std::size_t>> gram_rows;
    std::size_t gram_line = 0;
    bool in_gram = false;

    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::size_t no = i + 1;
        std::string line = trim(lines[i]);
        if (line.empty())
            continue;
        auto colon = line.find(':');
        if (colon == std::string::npos) {
            if (!in_gram)
                throw ParseError("expected 'key: value'", no);
            gram_rows.emplace_back(split_tokens(line), no);
            continue;
        }
        in_gram = false;
        std::string head = trim(line.substr(0, colon));
        std::string body = trim(line.substr(colon + 1));
        auto space = head.find(' ');
        std::string key = space == std::string::npos ? head : head.substr(0, space);
        std::string name = space == std::string::npos ? "" : trim(head.substr(space + 1));

        if (key == "field") {
            if (field)
                throw ParseError("duplicate 'field'", no);
            try {
                field = parse_field(body);
            } catch (const ParseError& e) {
                throw ParseError(e.what(), no);
            }
        } else if (key == "dim") {
            if (dim)
                throw ParseError("duplicate 'dim'", no);
            if (body.empty() || !std::all_of(body.begin(), body.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
                body.size() > 3 || std::stoul(body) == 0)
                throw ParseError("dim must be a positive integer", no);
            dim = std::stoul(body);
        } else if (key == "gram") {
            if (gram_line)
                throw ParseError("duplicate 'gram'", no);
            gram_line = no;
            gram_spec = body;
            in_gram = body.empty();
        } else if (key == "subspace" || key == "state") {
            if (!is_name(name))
                throw ParseError(key + " needs a name: '" + key + " NAME: ...'", no);
            entries.push_back({key, name, body, no});
        } else {
            throw ParseError("unknown key '" + key + "'", no);
        }
    }

    if (!field)
        throw ParseError("missing 'field:' line");
    if (!gram_line)
        throw ParseError("missing 'gram:' section");
    const FieldDescriptor f = *field;

    Matrix gram;
    if (gram_spec == "identity") {
        if (!dim)
            throw ParseError("'gram: identity' needs 'dim:'", gram_line);
        gram = Matrix::identity(f, *dim);
    } else if (gram_spec.rfind("diag(", 0) == 0 && gram_spec.back() == ')') {
        auto lits = split_tokens(gram_spec.substr(5, gram_spec.size() - 6));
        if (lits.empty())
            throw ParseError("empty diag()", gram_line);
        if (dim && *dim != lits.size())
            throw ParseError("diag() has " + std::to_string(lits.size()) + " entries but dim is " +
                                 std::to_string(*dim),
                             gram_line);
        std::vector<Scalar> d;
        try {
            for (const auto& l : lits)
                d.push_back(parse_scalar(l, f));
        } catch (const ParseError& e) {
            throw ParseError(e.what(), gram_line);
        }
        gram = Matrix::diagonal(f, d);
    } else if (gram_spec.empty()) {
        if (gram_rows.empty())
            throw ParseError("gram section has no rows", gram_line);
        const std::size_t n = dim ? *dim : gram_rows[0].first.size();
        if (gram_rows.size() != n)
            throw ParseError("gram has " + std::to_string(gram_rows.size()) + " rows, expected " + std::to_string(n),
                             gram_rows.back().second);
        gram = Matrix(f, n, n);
        for (std::size_t r = 0; r < n; ++r) {
            const auto& [lits, no] = gram_rows[r];
            if (lits.size() != n)
                throw ParseError("gram row has " + std::to_string(lits.size()) + " entries, expected " +
                                     std::to_string(n),
                                 no);
            try {
                for (std::size_t c = 0; c < n; ++c)
                    gram(r, c) = parse_scalar(lits[c], f);
            } catch (const ParseError& e) {
                throw ParseError(e.what(), no);
            }
        }
    } else {
        throw ParseError("gram must be 'identity', 'diag(...)' or rows on the following lines", gram_line);
    }
    if (dim && gram.rows() != *dim)
        throw ParseError("gram size does not match dim", gram_line);

    Document doc;
    doc.field = f;
    try {
        doc.space = HermitianSpace::from_gram(gram);
    } catch (const GramError& e) {
        std::size_t no = gram_rows.size() > e.row() ? gram_rows[e.row()].second : gram_line;
        throw ParseError(e.what(), no);
    }
    const std::size_t n = gram.rows();

    for (const auto& e : entries) {
        auto taken = [&](const std::string& nm) {
            if (doc.has_subspace(nm))
                return true;
            for (const auto& s : doc.states)
                if (s.name == nm)
                    return true;
            return false;
        };
        if (taken(e.name))
            throw ParseError("duplicate name '" + e.name + "'", e.line);

        if (e.key == "subspace") {
            std::vector<Vector> rows;
            for (const auto& t : parse_tuples(e.body, e.line))
                rows.push_back(parse_vector(t, f, n, e.line));
            doc.subspaces.emplace_back(e.name, Subspace::span(f, n, std::move(rows)));
            continue;
        }

        StateSpec st;
        st.name = e.name;
        st.line = e.line;
        auto sp = e.body.find(' ');
        std::string kind = sp == std::string::npos ? e.body : e.body.substr(0, sp);
        std::string rest = sp == std::string::npos ? "" : trim(e.body.substr(sp + 1));
        if (kind == "vector" || kind == "atom") {
            auto tuples = parse_tuples(rest, e.line);
            if (tuples.size() != 1)
                throw ParseError(kind + " state needs exactly one vector", e.line);
            st.kind = kind == "vector" ? StateSpec::Kind::vector : StateSpec::Kind::atom;
            st.vector = parse_vector(tuples[0], f, n, e.line);
            if (st.vector.is_zero())
                throw ParseError("state vector is zero", e.line);
        } else if (kind == "mixture") {
            st.kind = StateSpec::Kind::mixture;
            std::istringstream terms(rest);
            std::string term;
            while (std::getline(terms, term, ',')) {
                auto parts = split_tokens(term);
                if (parts.size() != 2)
                    throw ParseError("mixture term must be 'WEIGHT NAME'", e.line);
                bool known = false;
                for (const auto& s : doc.states)
                    known = known || s.name == parts[1];
                if (!known)
                    throw ParseError("mixture refers to unknown state '" + parts[1] + "'", e.line);
                st.parts.emplace_back(parse_weight(parts[0], e.line), parts[1]);
            }
            if (st.parts.empty())
                throw ParseError("empty mixture", e.line);
        } else {
            throw ParseError("state kind must be vector, atom or mixture", e.line);
        }
        doc.states.push_back(std::move(st));
    }
    return doc;
}

Document load_document(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_document(ss.str());
}

} // namespace orthoform::cli
