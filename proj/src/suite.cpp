#include "plab/suite.hpp"

#include <functional>
#include <map>

#include "plab/errors.hpp"
#include "plab/rota_baxter.hpp"

namespace plab {
namespace {

const std::map<std::string, std::string>& categories() {
    static const std::map<std::string, std::string> cats = {
        {"pre_lie", "preLie"},
        {"lie", "preLie"},
        {"leibniz", "preLie"},
        {"averaging", "averaging"},
        {"rep", "averaging"},
        {"avg_rep", "averaging"},
        {"homomorphism", "averaging"},
        {"quadratic", "bialgebra"},
        {"prelie_coalgebra", "bialgebra"},
        {"avg_coalgebra", "bialgebra"},
        {"avg_bialgebra", "bialgebra"},
        {"balanced", "bialgebra"},
        {"avg_lie_bialgebra", "bialgebra"},
        {"s_equation", "cybe"},
        {"quasi_triangular", "cybe"},
        {"factorizable", "cybe"},
        {"admissible_cybe", "cybe"},
        {"combined_conditions", "cybe"},
        {"rb", "rota-baxter"},
        {"avg_commutes_rb", "rota-baxter"},
        {"avg_on_qrb", "rota-baxter"},
        {"relative_rb", "rota-baxter"},
    };
    return cats;
}

struct Runner {
    Workspace& ws;

    const Algebra& algebra(const std::string& name) const {
        auto it = ws.algebras.find(name);
        if (it == ws.algebras.end()) throw UnknownObject("algebra '" + name + "'");
        return it->second;
    }
    const Coalgebra& coalgebra(const std::string& name) const {
        auto it = ws.coalgebras.find(name);
        if (it == ws.coalgebras.end()) throw UnknownObject("coalgebra '" + name + "'");
        return it->second;
    }
    const Matrix& map(const std::string& name) const {
        auto it = ws.maps.find(name);
        if (it == ws.maps.end()) throw UnknownObject("map '" + name + "'");
        return it->second;
    }
    const BilinearForm& form(const std::string& name) const {
        auto it = ws.forms.find(name);
        if (it == ws.forms.end()) throw UnknownObject("form '" + name + "'");
        return it->second;
    }
    const RTensor& rtensor(const std::string& name) const {
        auto it = ws.rtensors.find(name);
        if (it == ws.rtensors.end()) throw UnknownObject("rtensor '" + name + "'");
        return it->second;
    }
    Representation representation(const std::string& name) const {
        auto it = ws.reps.find(name);
        if (it == ws.reps.end()) throw UnknownObject("rep '" + name + "'");
        return make_representation(algebra(it->second.algebra), it->second.module_dim,
                                   it->second.rho, it->second.phi);
    }
    AvgRepresentation avg_rep(const std::string& rep, const std::string& alpha) const {
        AvgRepresentation ar;
        ar.rep = representation(rep);
        ar.alpha = map(alpha);
        return ar;
    }

    void need(const CheckDescriptor& d, size_t n, const char* usage) const {
        if (d.args.size() != n)
            throw UnknownCheck(std::string("usage: ") + usage + " (line " +
                               std::to_string(d.line) + ")");
    }

    Rational rational_arg(const std::string& t) const {
        auto v = Rational::parse(t);
        if (!v) throw UnknownCheck("expected a rational, got '" + t + "'");
        return *v;
    }

    CheckReport run_check(const CheckDescriptor& d) const {
        const std::string& op = d.op;
        const auto& a = d.args;
        if (op == "pre_lie") { need(d, 1, "check pre_lie A"); return check_pre_lie(algebra(a[0])); }
        if (op == "lie") { need(d, 1, "check lie A"); return check_lie(algebra(a[0])); }
        if (op == "leibniz") { need(d, 1, "check leibniz A"); return check_leibniz(algebra(a[0])); }
        if (op == "averaging") {
            need(d, 2, "check averaging A P");
            return check_averaging(algebra(a[0]), map(a[1]));
        }
        if (op == "rep") {
            need(d, 2, "check rep A REP");
            return check_prelie_representation(algebra(a[0]), representation(a[1]));
        }
        if (op == "avg_rep") {
            need(d, 4, "check avg_rep A P REP ALPHA");
            return check_avg_representation(AveragingAlgebra{algebra(a[0]), map(a[1])},
                                            representation(a[2]), map(a[3]));
        }
        if (op == "homomorphism") {
            need(d, 5, "check homomorphism A P B Q F");
            return check_homomorphism(AveragingAlgebra{algebra(a[0]), map(a[1])},
                                      AveragingAlgebra{algebra(a[2]), map(a[3])}, map(a[4]));
        }
        if (op == "quadratic") {
            if (a.size() == 2) return check_quadratic(algebra(a[0]), form(a[1]));
            need(d, 3, "check quadratic A W [P]");
            const Matrix& p = map(a[2]);
            return check_quadratic(algebra(a[0]), form(a[1]), &p);
        }
        if (op == "prelie_coalgebra") {
            need(d, 1, "check prelie_coalgebra D");
            return check_prelie_coalgebra(coalgebra(a[0]));
        }
        if (op == "avg_coalgebra") {
            need(d, 2, "check avg_coalgebra D S");
            return check_avg_coalgebra(coalgebra(a[0]), map(a[1]));
        }
        if (op == "avg_bialgebra") {
            need(d, 4, "check avg_bialgebra A P D S");
            AvgBialgebra bi{AveragingAlgebra{algebra(a[0]), map(a[1])}, coalgebra(a[2]), map(a[3]),
                            false};
            return check_avg_prelie_bialgebra(bi);
        }
        if (op == "balanced") {
            need(d, 2, "check balanced A D");
            return check_balanced(algebra(a[0]), coalgebra(a[1]));
        }
        if (op == "avg_lie_bialgebra") {
            need(d, 4, "check avg_lie_bialgebra A D P S");
            return check_avg_lie_bialgebra(algebra(a[0]), coalgebra(a[1]), map(a[2]), map(a[3]));
        }
        if (op == "s_equation") {
            need(d, 2, "check s_equation A r");
            return check_S_equation(algebra(a[0]), rtensor(a[1]));
        }
        if (op == "quasi_triangular") {
            need(d, 2, "check quasi_triangular A r");
            return check_quasi_triangular(algebra(a[0]), rtensor(a[1]));
        }
        if (op == "factorizable") {
            need(d, 2, "check factorizable A r");
            return check_factorizable(algebra(a[0]), rtensor(a[1]));
        }
        if (op == "admissible_cybe") {
            need(d, 4, "check admissible_cybe A P S r");
            return check_admissible_cybe(AveragingAlgebra{algebra(a[0]), map(a[1])}, map(a[2]),
                                         rtensor(a[3]));
        }
        if (op == "combined_conditions") {
            need(d, 4, "check combined_conditions A P S r");
            return check_combined_conditions(AveragingAlgebra{algebra(a[0]), map(a[1])}, map(a[2]),
                                             rtensor(a[3]));
        }
        if (op == "rb") {
            need(d, 3, "check rb A B lambda");
            return check_rb(algebra(a[0]), map(a[1]), rational_arg(a[2]));
        }
        if (op == "avg_commutes_rb") {
            need(d, 4, "check avg_commutes_rb A P B lambda");
            return check_avg_commutes_rb(AveragingAlgebra{algebra(a[0]), map(a[1])}, map(a[2]),
                                         rational_arg(a[3]));
        }
        if (op == "avg_on_qrb") {
            need(d, 5, "check avg_on_qrb A W B lambda P");
            return check_avg_on_qrb(algebra(a[0]), form(a[1]), map(a[2]), rational_arg(a[3]),
                                    map(a[4]));
        }
        if (op == "relative_rb") {
            need(d, 5, "check relative_rb A P REP ALPHA T");
            return check_relative_rb(AveragingAlgebra{algebra(a[0]), map(a[1])},
                                     avg_rep(a[2], a[3]), map(a[4]));
        }
        throw UnknownCheck("'" + op + "' (line " + std::to_string(d.line) + ")");
    }

    void register_algebra(const std::string& name, Algebra alg, int line) {
        if (ws.algebras.count(name) || ws.coalgebras.count(name) || ws.maps.count(name))
            throw UnknownCheck("derive target '" + name + "' already exists (line " +
                               std::to_string(line) + ")");
        alg.label = name;
        ws.algebras.emplace(name, std::move(alg));
        ws.order.emplace_back("algebra", name);
    }

    CheckReport run_derive(const CheckDescriptor& d) {
        const std::string& op = d.op;
        const auto& a = d.args;
        CheckReport rep;
        rep.name = "derive " + op;
        rep.item("constructed");
        if (op == "sub_adjacent_lie") {
            need(d, 1, "derive sub_adjacent_lie A as NAME");
            register_algebra(d.out, sub_adjacent_lie(certify_pre_lie(algebra(a[0]))), d.line);
            return rep;
        }
        if (op == "induced_leibniz") {
            need(d, 2, "derive induced_leibniz A P as NAME");
            AveragingAlgebra avg = make_averaging(certify_pre_lie(algebra(a[0])), map(a[1]));
            register_algebra(d.out, induced_leibniz(avg), d.line);
            return rep;
        }
        if (op == "descendent") {
            need(d, 3, "derive descendent A B lambda as NAME");
            register_algebra(d.out, descendent_product(algebra(a[0]), map(a[1]),
                                                       rational_arg(a[2])),
                             d.line);
            return rep;
        }
        if (op == "dualize_product") {
            need(d, 1, "derive dualize_product A as NAME");
            Coalgebra co = dualize_product(algebra(a[0]));
            co.label = d.out;
            if (ws.coalgebras.count(d.out) || ws.algebras.count(d.out))
                throw UnknownCheck("derive target '" + d.out + "' already exists");
            ws.coalgebras.emplace(d.out, std::move(co));
            ws.order.emplace_back("coalgebra", d.out);
            return rep;
        }
        if (op == "delta_r") {
            need(d, 2, "derive delta_r A r as NAME");
            Coalgebra co = delta_r(algebra(a[0]), rtensor(a[1]), d.out);
            if (ws.coalgebras.count(d.out) || ws.algebras.count(d.out))
                throw UnknownCheck("derive target '" + d.out + "' already exists");
            ws.coalgebras.emplace(d.out, std::move(co));
            ws.order.emplace_back("coalgebra", d.out);
            return rep;
        }
        throw UnknownCheck("derive op '" + op + "' (line " + std::to_string(d.line) + ")");
    }
};

} // namespace

std::string check_category(const std::string& op) {
    auto it = categories().find(op);
    if (it == categories().end()) throw UnknownCheck("'" + op + "'");
    return it->second;
}

std::vector<CheckDescriptor> preset_suite(const Workspace& ws, const std::string& preset) {
    if (preset != "all" && preset != "preLie" && preset != "averaging" &&
        preset != "bialgebra" && preset != "cybe" && preset != "rota-baxter")
        throw UnknownCheck("unknown suite preset '" + preset + "'");
    std::vector<CheckDescriptor> out;
    for (const auto& d : ws.directives) {
        if (d.derive || preset == "all" || check_category(d.op) == preset) out.push_back(d);
    }
    return out;
}

Report run_suite(Workspace& ws, const std::vector<CheckDescriptor>& suite) {
    Runner runner{ws};
    Report rep;
    for (const auto& d : suite) {
        SuiteRecord rec;
        rec.op = d.op;
        rec.args = d.args;
        rec.out = d.out;
        rec.report = d.derive ? runner.run_derive(d) : runner.run_check(d);
        rep.records.push_back(std::move(rec));
    }
    return rep;
}

} // namespace plab
