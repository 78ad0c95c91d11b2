#include "mdbell/model_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace mdbell {

ParseError::ParseError(const std::string& source, int line, int column,
                       const std::string& message)
    : Error(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

struct Token {
    std::string text;
    int column = 0; // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == ' ' || line[i] == '\t') {
            ++i;
            continue;
        }
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t')
            ++i;
        tokens.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return tokens;
}

bool is_blank_or_comment(const std::string& line) {
    for (char c : line) {
        if (c == ' ' || c == '\t')
            continue;
        return c == '#';
    }
    return true;
}

struct Reader {
    std::string source;
    std::vector<std::string> lines;
    std::size_t next = 0; // 0-based index of the next line to hand out

    explicit Reader(const std::string& source_name, const std::string& text)
        : source(source_name) {
        std::string current;
        const auto flush = [this, &current] {
            if (!current.empty() && current.back() == '\r')
                current.pop_back();
            lines.push_back(std::move(current));
            current.clear();
        };
        for (char c : text) {
            if (c == '\n')
                flush();
            else
                current.push_back(c);
        }
        if (!current.empty())
            flush();
    }

    [[noreturn]] void fail(int line, int column, const std::string& message) const {
        throw ParseError(source, line, column, message);
    }

    // Returns the next significant line with its 1-based number, or false.
    bool next_line(std::string& out, int& number) {
        while (next < lines.size()) {
            const std::string& line = lines[next++];
            if (is_blank_or_comment(line))
                continue;
            out = line;
            number = static_cast<int>(next);
            return true;
        }
        return false;
    }

    int eof_line() const { return static_cast<int>(lines.size()) + 1; }
};

} // namespace

Model read_model(const std::string& text, const std::string& source_name) {
    Reader reader(source_name, text);
    std::string line;
    int line_no = 0;

    if (!reader.next_line(line, line_no))
        reader.fail(reader.eof_line(), 1, "expected 'pairing:' line");

    std::string label;
    if (line.rfind("label:", 0) == 0) {
        label = line.substr(6);
        if (!label.empty() && label.front() == ' ')
            label.erase(label.begin());
        if (!reader.next_line(line, line_no))
            reader.fail(reader.eof_line(), 1, "expected 'pairing:' line");
    }

    if (line.rfind("pairing:", 0) != 0)
        reader.fail(line_no, 1, "expected 'pairing:' line");
    std::string pairing_text = line.substr(8);
    if (!pairing_text.empty() && pairing_text.front() == ' ')
        pairing_text.erase(pairing_text.begin());
    Pairing pairing;
    try {
        pairing = parse_pairing(pairing_text);
    } catch (const Error& e) {
        reader.fail(line_no, 9, e.what());
    }

    if (!reader.next_line(line, line_no))
        reader.fail(reader.eof_line(), 1, "expected 'lambda' header line");
    std::vector<Token> header = tokenize(line);
    if (header.empty() || header[0].text != "lambda")
        reader.fail(line_no, header.empty() ? 1 : header[0].column,
                    "expected 'lambda' header line");
    const std::vector<std::string> names = response_column_names(pairing);
    std::size_t pos = 1;
    for (const std::string& name : names) {
        if (pos >= header.size() || header[pos].text != name)
            reader.fail(line_no, pos < header.size() ? header[pos].column : 1,
                        "expected response column '" + name + "'");
        ++pos;
    }
    std::vector<Context> contexts;
    if (pos < header.size()) {
        if (header[pos].text != "|")
            reader.fail(line_no, header[pos].column, "expected '|' before context columns");
        ++pos;
        for (; pos < header.size(); ++pos) {
            Context ctx;
            try {
                ctx = Context::parse(header[pos].text);
            } catch (const Error& e) {
                reader.fail(line_no, header[pos].column, e.what());
            }
            for (const Context& existing : contexts)
                if (existing == ctx)
                    reader.fail(line_no, header[pos].column,
                                "duplicate context column '" + header[pos].text + "'");
            contexts.push_back(ctx);
        }
        if (contexts.empty())
            reader.fail(line_no, 1, "'|' with no context columns");
    }

    ResponseTable responses;
    responses.pairing = pairing;
    std::vector<std::vector<Rational>> context_rows; // per row, per context
    while (reader.next_line(line, line_no)) {
        std::vector<Token> tokens = tokenize(line);
        std::size_t t = 0;
        const std::string expected_index = std::to_string(responses.rows.size() + 1);
        if (tokens.empty() || tokens[0].text != expected_index)
            reader.fail(line_no, tokens.empty() ? 1 : tokens[0].column,
                        "expected row index " + expected_index);
        ++t;
        std::array<int, 6> row{};
        for (std::size_t k = 0; k < 6; ++k, ++t) {
            if (t >= tokens.size())
                reader.fail(line_no, 1, "expected 6 response entries");
            if (tokens[t].text == "+1")
                row[k] = 1;
            else if (tokens[t].text == "-1")
                row[k] = -1;
            else
                reader.fail(line_no, tokens[t].column,
                            "response entry must be +1 or -1, got '" + tokens[t].text + "'");
        }
        std::vector<Rational> probabilities;
        if (!contexts.empty()) {
            if (t >= tokens.size() || tokens[t].text != "|")
                reader.fail(line_no, t < tokens.size() ? tokens[t].column : 1,
                            "expected '|' before probabilities");
            ++t;
            for (std::size_t k = 0; k < contexts.size(); ++k, ++t) {
                if (t >= tokens.size())
                    reader.fail(line_no, 1,
                                "expected " + std::to_string(contexts.size()) +
                                    " probabilities");
                try {
                    probabilities.push_back(parse_rational(tokens[t].text));
                } catch (const Error& e) {
                    reader.fail(line_no, tokens[t].column, e.what());
                }
            }
        }
        if (t < tokens.size())
            reader.fail(line_no, tokens[t].column,
                        "unexpected token '" + tokens[t].text + "'");
        responses.rows.push_back(row);
        context_rows.push_back(std::move(probabilities));
    }
    if (responses.rows.empty())
        reader.fail(reader.eof_line(), 1, "model has no response rows");

    ContextDistribution distributions;
    for (std::size_t c = 0; c < contexts.size(); ++c) {
        std::vector<Rational> column;
        column.reserve(responses.rows.size());
        for (const auto& row : context_rows)
            column.push_back(row[c]);
        distributions.columns.emplace(contexts[c], std::move(column));
    }
    return build_model(std::move(responses), std::move(distributions), std::move(label));
}

std::string write_model(const Model& model) {
    std::ostringstream out;
    if (!model.label.empty())
        out << "label: " << model.label << '\n';
    out << "pairing: " << to_string(model.responses.pairing) << '\n';
    out << "lambda";
    for (const std::string& name : response_column_names(model.responses.pairing))
        out << ' ' << name;
    const auto& columns = model.distributions.columns;
    if (!columns.empty()) {
        out << " |";
        for (const auto& [ctx, column] : columns)
            out << ' ' << ctx.to_string();
    }
    out << '\n';
    for (std::size_t lam = 0; lam < model.responses.rows.size(); ++lam) {
        out << (lam + 1);
        for (int v : model.responses.rows[lam])
            out << ' ' << (v > 0 ? "+1" : "-1");
        if (!columns.empty()) {
            out << " |";
            for (const auto& [ctx, column] : columns)
                out << ' ' << to_string(column[lam]);
        }
        out << '\n';
    }
    return out.str();
}

Model load_model(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open file '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return read_model(buffer.str(), path.string());
}

void save_model(const Model& model, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error("cannot write file '" + path.string() + "'");
    out << write_model(model);
    if (!out)
        throw Error("cannot write file '" + path.string() + "'");
}

std::string write_strategy(const ResponseTable& strategy) {
    Model bare;
    bare.responses = strategy;
    return write_model(bare);
}

ResponseTable read_strategy(const std::string& text, const std::string& source_name) {
    return read_model(text, source_name).responses;
}

ResponseTable load_strategy(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open file '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return read_strategy(buffer.str(), path.string());
}

} // namespace mdbell
