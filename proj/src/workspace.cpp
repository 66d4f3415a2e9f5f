#include "plab/workspace.hpp"

#include <algorithm>
#include <sstream>

#include "plab/errors.hpp"

namespace plab {
namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> toks;
    std::string t;
    while (in >> t) toks.push_back(t);
    return toks;
}

int parse_int(const std::string& t, int line) {
    try {
        size_t pos = 0;
        int v = std::stoi(t, &pos);
        if (pos != t.size()) throw std::invalid_argument(t);
        return v;
    } catch (const std::exception&) {
        throw ParseError(line, "expected an integer, got '" + t + "'");
    }
}

Rational parse_rational(const std::string& t, int line) {
    auto v = Rational::parse(t);
    if (!v) throw ParseError(line, "expected a rational p/q, got '" + t + "'");
    return *v;
}

// A matrix under construction from `row` lines.
struct RowSink {
    std::string kind;   // map, form, rtensor, rep.rho, rep.phi
    std::string name;
    int rep_index = -1; // for rep blocks: which basis element
    Matrix m;
    int next_row = 0;
    int header_line = 0;
    bool done() const { return next_row == m.rows(); }
};

struct TensorSink {
    std::string kind; // algebra or coalgebra
    std::string name;
};

struct Parser {
    Workspace ws;
    std::optional<RowSink> sink;
    std::optional<TensorSink> tsink;

    void require_fresh(const std::string& name, int line) {
        if (ws.algebras.count(name) || ws.coalgebras.count(name) || ws.maps.count(name) ||
            ws.forms.count(name) || ws.rtensors.count(name) || ws.reps.count(name))
            throw ParseError(line, "duplicate name '" + name + "'");
    }

    int algebra_dim(const std::string& name, int line) const {
        auto it = ws.algebras.find(name);
        if (it == ws.algebras.end())
            throw ParseError(line, "unknown algebra '" + name + "'");
        return it->second.dim;
    }

    void flush_sink(int line) {
        if (sink && !sink->done())
            throw ParseError(line, "object '" + sink->name + "' declared at line " +
                                       std::to_string(sink->header_line) + " is missing rows");
        if (sink && sink->done()) {
            if (sink->kind == "map") ws.maps[sink->name] = std::move(sink->m);
            else if (sink->kind == "form") ws.forms[sink->name] = BilinearForm{std::move(sink->m)};
            else if (sink->kind == "rtensor")
                ws.rtensors[sink->name] = make_rtensor(sink->m.rows(), std::move(sink->m));
            else if (sink->kind == "rep.rho")
                ws.reps[sink->name].rho[sink->rep_index] = std::move(sink->m);
            else if (sink->kind == "rep.phi")
                ws.reps[sink->name].phi[sink->rep_index] = std::move(sink->m);
            sink.reset();
        }
    }

    void handle(const std::vector<std::string>& t, int line) {
        const std::string& head = t[0];
        if (head == "row") {
            if (!sink) throw ParseError(line, "row outside of any object");
            if (sink->done()) throw ParseError(line, "too many rows for '" + sink->name + "'");
            if (int(t.size()) - 1 != sink->m.cols())
                throw ParseError(line, "expected " + std::to_string(sink->m.cols()) +
                                           " entries, got " + std::to_string(int(t.size()) - 1));
            for (int j = 1; j < int(t.size()); ++j)
                sink->m(sink->next_row, j - 1) = parse_rational(t[j], line);
            ++sink->next_row;
            return;
        }
        flush_sink(line);

        if (head == "c" || head == "d") {
            if (!tsink || (head == "c") != (tsink->kind == "algebra"))
                throw ParseError(line, "'" + head + "' line outside of a matching declaration");
            if (t.size() != 6 || t[4] != "=")
                throw ParseError(line, "expected '" + head + " i j k = p/q'");
            Tensor3& tt = tsink->kind == "algebra" ? ws.algebras.at(tsink->name).product
                                                   : ws.coalgebras.at(tsink->name).coproduct;
            int i = parse_int(t[1], line), j = parse_int(t[2], line), k = parse_int(t[3], line);
            if (i < 1 || i > tt.dim1() || j < 1 || j > tt.dim2() || k < 1 || k > tt.dim3())
                throw ParseError(line, "index out of range");
            tt(i - 1, j - 1, k - 1) = parse_rational(t[5], line);
            return;
        }
        tsink.reset();

        if (head == "algebra" || head == "coalgebra") {
            if (t.size() != 4 || t[2] != "dim")
                throw ParseError(line, "expected '" + head + " NAME dim N'");
            int n = parse_int(t[3], line);
            if (n < 0) throw ParseError(line, "negative dimension");
            require_fresh(t[1], line);
            if (head == "algebra")
                ws.algebras.emplace(t[1], make_algebra(t[1], n, Tensor3(n, n, n)));
            else
                ws.coalgebras.emplace(t[1], make_coalgebra(t[1], n, Tensor3(n, n, n)));
            ws.order.emplace_back(head, t[1]);
            tsink = TensorSink{head, t[1]};
            return;
        }
        if (head == "map") {
            require_fresh(t[1], line);
            int rows = 0, cols = 0;
            if (t.size() == 4 && t[2] == "from") {
                rows = cols = algebra_dim(t[3], line);
            } else if (t.size() == 6 && t[2] == "from" && t[4] == "dim") {
                rows = algebra_dim(t[3], line);
                cols = parse_int(t[5], line);
            } else if (t.size() == 4 && t[2] == "dim") {
                rows = cols = parse_int(t[3], line);
            } else {
                throw ParseError(line, "expected 'map NAME from A [dim M]' or 'map NAME dim M'");
            }
            ws.order.emplace_back("map", t[1]);
            sink = RowSink{"map", t[1], -1, Matrix(rows, cols), 0, line};
            return;
        }
        if (head == "form" || head == "rtensor") {
            if (t.size() != 4 || t[2] != "on")
                throw ParseError(line, "expected '" + head + " NAME on A'");
            require_fresh(t[1], line);
            int n = algebra_dim(t[3], line);
            ws.order.emplace_back(head, t[1]);
            sink = RowSink{head, t[1], -1, Matrix(n, n), 0, line};
            return;
        }
        if (head == "rep") {
            if (t.size() != 6 || t[2] != "of" || t[4] != "dim")
                throw ParseError(line, "expected 'rep NAME of A dim M'");
            require_fresh(t[1], line);
            int n = algebra_dim(t[3], line);
            int m = parse_int(t[5], line);
            RepData rd;
            rd.algebra = t[3];
            rd.module_dim = m;
            rd.rho.assign(n, Matrix(m, m));
            rd.phi.assign(n, Matrix(m, m));
            ws.reps.emplace(t[1], std::move(rd));
            ws.order.emplace_back("rep", t[1]);
            return;
        }
        if (head == "rho" || head == "phi") {
            if (t.size() != 3) throw ParseError(line, "expected '" + head + " REP i'");
            auto it = ws.reps.find(t[1]);
            if (it == ws.reps.end()) throw ParseError(line, "unknown rep '" + t[1] + "'");
            int i = parse_int(t[2], line);
            int n = int(it->second.rho.size());
            if (i < 1 || i > n) throw ParseError(line, "basis index out of range");
            int m = it->second.module_dim;
            sink = RowSink{"rep." + head, t[1], i - 1, Matrix(m, m), 0, line};
            return;
        }
        if (head == "check" || head == "derive") {
            if (t.size() < 2) throw ParseError(line, "expected '" + head + " OP ...'");
            CheckDescriptor d;
            d.op = t[1];
            d.derive = head == "derive";
            d.line = line;
            size_t end = t.size();
            if (d.derive) {
                if (t.size() < 4 || t[t.size() - 2] != "as")
                    throw ParseError(line, "expected 'derive OP ARGS... as NAME'");
                d.out = t.back();
                end = t.size() - 2;
            }
            for (size_t i = 2; i < end; ++i) d.args.push_back(t[i]);
            ws.directives.push_back(std::move(d));
            return;
        }
        throw ParseError(line, "unknown directive '" + head + "'");
    }
};

} // namespace

Workspace parse_workspace(const std::string& text) {
    Parser p;
    std::istringstream in(text);
    std::string line;
    int line_no = 0, last_line = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto toks = tokenize(line);
        if (toks.empty() || toks[0][0] == '#') continue;
        last_line = line_no;
        p.handle(toks, line_no);
    }
    p.flush_sink(last_line + 1);
    return std::move(p.ws);
}

std::string print_workspace(const Workspace& ws) {
    std::ostringstream out;
    auto rows = [&](const Matrix& m) {
        for (int i = 0; i < m.rows(); ++i) {
            out << "row";
            for (int j = 0; j < m.cols(); ++j) out << " " << m(i, j).pretty();
            out << "\n";
        }
    };
    auto constants = [&](const Tensor3& t, const char* head) {
        for (int i = 0; i < t.dim1(); ++i)
            for (int j = 0; j < t.dim2(); ++j)
                for (int k = 0; k < t.dim3(); ++k)
                    if (!t(i, j, k).is_zero())
                        out << head << " " << i + 1 << " " << j + 1 << " " << k + 1 << " = "
                            << t(i, j, k).pretty() << "\n";
    };
    for (const auto& [kind, name] : ws.order) {
        if (kind == "algebra") {
            const Algebra& a = ws.algebras.at(name);
            out << "algebra " << name << " dim " << a.dim << "\n";
            constants(a.product, "c");
        } else if (kind == "coalgebra") {
            const Coalgebra& c = ws.coalgebras.at(name);
            out << "coalgebra " << name << " dim " << c.dim << "\n";
            constants(c.coproduct, "d");
        } else if (kind == "map") {
            const Matrix& m = ws.maps.at(name);
            if (m.rows() == m.cols()) {
                out << "map " << name << " dim " << m.rows() << "\n";
            } else {
                out << "map " << name << " from " << [&] {
                    for (const auto& [k2, n2] : ws.order)
                        if (k2 == "algebra" && ws.algebras.at(n2).dim == m.rows()) return n2;
                    throw Error("internal: no algebra matches map row dimension");
                }() << " dim " << m.cols() << "\n";
            }
            rows(m);
        } else if (kind == "form") {
            // Forms and r-tensors are printed against the algebra of matching
            // dimension that appears first in declaration order.
            const Matrix& m = ws.forms.at(name).matrix;
            out << "form " << name << " on " << [&] {
                for (const auto& [k2, n2] : ws.order)
                    if (k2 == "algebra" && ws.algebras.at(n2).dim == m.rows()) return n2;
                throw Error("internal: no algebra matches form dimension");
            }() << "\n";
            rows(m);
        } else if (kind == "rtensor") {
            const Matrix& m = ws.rtensors.at(name).coeff;
            out << "rtensor " << name << " on " << [&] {
                for (const auto& [k2, n2] : ws.order)
                    if (k2 == "algebra" && ws.algebras.at(n2).dim == m.rows()) return n2;
                throw Error("internal: no algebra matches rtensor dimension");
            }() << "\n";
            rows(m);
        } else if (kind == "rep") {
            const RepData& rd = ws.reps.at(name);
            out << "rep " << name << " of " << rd.algebra << " dim " << rd.module_dim << "\n";
            for (int i = 0; i < int(rd.rho.size()); ++i) {
                out << "rho " << name << " " << i + 1 << "\n";
                rows(rd.rho[i]);
            }
            for (int i = 0; i < int(rd.phi.size()); ++i) {
                out << "phi " << name << " " << i + 1 << "\n";
                rows(rd.phi[i]);
            }
        }
    }
    for (const auto& d : ws.directives) {
        out << (d.derive ? "derive " : "check ") << d.op;
        for (const auto& a : d.args) out << " " << a;
        if (d.derive) out << " as " << d.out;
        out << "\n";
    }
    return out.str();
}

} // namespace plab
