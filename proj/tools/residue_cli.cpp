// residue: exact Parshin-residue calculator for affine plane curves.
//
// Subcommands: sing | branches | parshin | sumcheck | membership | fclass.
// All values are exact and serialized as strings; identical invocations
// produce byte-identical output.

#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "residue/analysis.hpp"
#include "residue/errors.hpp"

using json = nlohmann::ordered_json;
using namespace parshin;

namespace {

struct Session {
    std::map<std::string, MultiPoly> curveTable;
    std::string targetCurve;  // name of the curve the command acts on
    PrecisionBudget budget;
    bool jsonOut = false;
    bool traced = false;
    bool precDouble = false;
    bool emitSeries = false;
};

Session makeSession() {
    Session s;
    s.curveTable.emplace("node", parseExpression("s^2*(s+1)-t^2"));
    s.curveTable.emplace("cusp", parseExpression("t^2-s^3"));
    s.curveTable.emplace("tacnode", parseExpression("t^2-s^4"));
    s.curveTable.emplace("inode", parseExpression("s^2+t^2-s^3"));
    if (const char* env = std::getenv("RESIDUE_MAX_ESCALATIONS"))
        s.budget.maxEscalations = std::stol(env);
    return s;
}

void registerCurveFlag(CLI::App* cmd, Session& s, std::vector<std::string>& curveArgs) {
    cmd->add_option("--curve", curveArgs,
                    "curve NAME=EXPR to define, or a name/expression to select");
    cmd->add_option("--prec-inner", s.budget.innerTerms, "u-window width");
    cmd->add_option("--prec-outer", s.budget.outerTerms, "g-window width");
    cmd->add_flag("--json", s.jsonOut, "emit a JSON report");
    cmd->add_flag("--traced", s.traced, "report values traced down to the point field");
    cmd->add_flag("--prec-double", s.precDouble,
                  "rerun at doubled precision and require identical values");
    cmd->add_flag("--emit-series", s.emitSeries, "dump the series expansions used");
}

// Apply --curve arguments: NAME=EXPR defines (and selects) a curve; a bare
// argument selects a table entry by name or registers an anonymous expression.
void applyCurveArgs(Session& s, const std::vector<std::string>& args) {
    for (const auto& a : args) {
        auto eq = a.find('=');
        if (eq != std::string::npos) {
            std::string name = a.substr(0, eq);
            s.curveTable.insert_or_assign(name, parseExpression(a.substr(eq + 1)));
            s.targetCurve = name;
        } else if (s.curveTable.count(a)) {
            s.targetCurve = a;
        } else {
            s.curveTable.insert_or_assign(a, parseExpression(a));
            s.targetCurve = a;
        }
    }
}

const MultiPoly& targetCurve(const Session& s) {
    if (s.targetCurve.empty()) throw ParseError("no curve given (use --curve)", 0);
    return s.curveTable.at(s.targetCurve);
}

// ---- serialization -------------------------------------------------------

json seriesJson(const LaurentSeries& a, const std::string& var = "u") {
    json j;
    j["var"] = var;
    j["low"] = a.isZeroToPrecision() ? 0 : a.low();
    json coeffs = json::array();
    for (const auto& c : a.coeffs()) coeffs.push_back(c.str());
    j["coeffs"] = std::move(coeffs);
    if (a.knowEnd() >= LaurentSeries::kExact)
        j["precision"] = "exact";
    else
        j["precision"] = a.knowEnd();
    return j;
}

json seriesJson(const TowerSeries& a) {
    json j;
    j["var"] = "g";
    j["low"] = a.coeffs().empty() ? 0 : a.gLow();
    json coeffs = json::array();
    for (const auto& c : a.coeffs()) coeffs.push_back(seriesJson(c));
    j["coeffs"] = std::move(coeffs);
    if (a.gKnowEnd() >= TowerSeries::kExact)
        j["precision"] = "exact";
    else
        j["precision"] = a.gKnowEnd();
    return j;
}

std::string fieldText(const FieldPtr& f) { return f ? f->minPolyText() : "Q"; }

json branchJson(const PuiseuxBranch& b, bool withSeries) {
    json j;
    j["e"] = b.e;
    j["classSize"] = b.conjugacyClassSize;
    j["field"] = fieldText(b.residueField);
    if (withSeries) {
        j["S"] = seriesJson(b.S);
        j["T"] = seriesJson(b.T);
    }
    return j;
}

std::string monomialText(long i, long j) {
    std::ostringstream os;
    if (i == 0 && j == 0) return "1";
    bool star = false;
    if (i > 0) {
        os << "s";
        if (i > 1) os << "^" << i;
        star = true;
    }
    if (j > 0) {
        if (star) os << "*";
        os << "t";
        if (j > 1) os << "^" << j;
    }
    return os.str();
}

json membershipJson(const MembershipReport& rep, bool traced) {
    json j;
    j["inL"] = rep.inL;
    j["bound"] = rep.monomialBound;
    json entries = json::array();
    for (const auto& e : rep.entries) {
        json ej;
        ej["branch"] = e.branchIndex;
        ej["monomial"] = monomialText(e.i, e.j);
        ej["value"] = (traced ? e.rv.tracedValue : e.rv.value).str();
        entries.push_back(std::move(ej));
    }
    j["entries"] = std::move(entries);
    return j;
}

// ---- input parsing -------------------------------------------------------

std::string trimmed(const std::string& s) {
    auto b = s.find_first_not_of(" \t");
    auto e = s.find_last_not_of(" \t");
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

// "[EXPR ds^dt / name^m]" with EXPR optional and m defaulting to 1
GeneralizedFraction parseClass(const std::string& text, const Session& s) {
    std::string t = trimmed(text);
    if (t.size() < 2 || t.front() != '[' || t.back() != ']')
        throw ParseError("generalized fraction must be bracketed: [EXPR ds^dt / f^m]", 0);
    std::string inner = t.substr(1, t.size() - 2);
    auto wedgePos = inner.find("ds^dt");
    if (wedgePos == std::string::npos)
        throw ParseError("generalized fraction needs ds^dt", 1);
    std::string numText = trimmed(inner.substr(0, wedgePos));
    std::string rest = trimmed(inner.substr(wedgePos + 5));
    if (rest.empty() || rest[0] != '/')
        throw ParseError("generalized fraction needs / f^m after ds^dt", 1);
    rest = trimmed(rest.substr(1));
    long m = 1;
    auto caret = rest.rfind('^');
    if (caret != std::string::npos &&
        rest.find_first_not_of("0123456789", caret + 1) == std::string::npos) {
        m = std::stol(rest.substr(caret + 1));
        rest = trimmed(rest.substr(0, caret));
    }
    auto it = s.curveTable.find(rest);
    MultiPoly f = (it != s.curveTable.end()) ? it->second : parseExpression(rest);
    MultiPoly p = numText.empty() ? MultiPoly::constant(AlgNumber(1)) : parseExpression(numText);
    return GeneralizedFraction(std::move(p), std::move(f), m);
}

// "EXPR ds^dt" (2-form) or a bracketed class converted via asForm()
DiffForm2 parseForm2(const std::string& text, const Session& s) {
    std::string t = trimmed(text);
    if (!t.empty() && t.front() == '[') return parseClass(t, s).asForm();
    auto pos = t.rfind("ds^dt");
    if (pos == std::string::npos || trimmed(t.substr(pos + 5)) != "")
        throw ParseError("2-form must end with ds^dt", t.size());
    std::string expr = trimmed(t.substr(0, pos));
    if (expr.empty()) expr = "1";
    ParsedRatio r = parseRationalExpression(expr);
    return DiffForm2{RationalFunction(r.num, r.den)};
}

// "EXPR ds" for the P1 global check; EXPR univariate in s
std::pair<UPoly<AlgNumber>, UPoly<AlgNumber>> parseForm1S(const std::string& text) {
    std::string t = trimmed(text);
    auto pos = t.rfind("ds");
    if (pos == std::string::npos || trimmed(t.substr(pos + 2)) != "")
        throw ParseError("1-form for the P1 check must end with ds", t.size());
    std::string expr = trimmed(t.substr(0, pos));
    if (expr.empty()) expr = "1";
    ParsedRatio r = parseRationalExpression(expr);
    auto toS = [](const MultiPoly& p) {
        if (p.degreeIn(1) > 0)
            throw ParseError("P1 check takes a form in s only", 0);
        auto rec = p.toRecursive();
        return rec.coeffs().empty() ? UPoly<AlgNumber>() : rec.coeffs()[0];
    };
    return {toS(r.num), toS(r.den)};
}

// "curve,origin,index" or "curve,a,b,index"
struct ChainSpec {
    std::string curveName;
    AlgNumber ps, pt;
    std::size_t branchIndex = 0;
};

ChainSpec parseChainSpec(const std::string& text, Session& s) {
    std::vector<std::string> tok;
    std::stringstream ss(text);
    std::string piece;
    while (std::getline(ss, piece, ',')) tok.push_back(trimmed(piece));
    ChainSpec spec;
    if (tok.size() == 3 && tok[1] == "origin") {
        spec.ps = AlgNumber(0);
        spec.pt = AlgNumber(0);
    } else if (tok.size() == 4) {
        spec.ps = parseExpression(tok[1]).constantValue();
        spec.pt = parseExpression(tok[2]).constantValue();
    } else {
        throw ParseError("chain spec is curve,origin,index or curve,a,b,index", 0);
    }
    spec.curveName = tok[0];
    spec.branchIndex = static_cast<std::size_t>(std::stol(tok.back()));
    applyCurveArgs(s, {tok[0]});
    return spec;
}

AlgNumber parsePointCoord(const std::string& text) {
    return parseExpression(text).constantValue();
}

// ---- output --------------------------------------------------------------

void emit(const Session& s, const json& j, const std::string& textReport) {
    if (s.jsonOut)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << textReport;
}

json pointJson(const SingularPoint& p) {
    json j;
    j["coords"] = json::array({p.s.str(), p.t.str()});
    j["field"] = fieldText(p.field);
    return j;
}

// check --prec-double stability: recompute a value signature at doubled
// precision and require exact agreement
void requireStable(const Session& s, const std::function<json(const PrecisionBudget&)>& fn,
                   const json& first) {
    if (!s.precDouble) return;
    json second = fn(s.budget.escalated());
    if (first != second)
        throw PrecisionExhausted("values changed under doubled precision");
}

// ---- subcommands ---------------------------------------------------------

int cmdSing(Session& s) {
    const MultiPoly& f = targetCurve(s);
    auto pts = singularPoints(f);
    json j;
    j["curve"] = f.str();
    json jp = json::array();
    std::ostringstream text;
    text << "curve: " << f.str() << "\n";
    if (pts.empty()) text << "no singular points\n";
    for (const auto& p : pts) {
        auto rep = analyzeSingularity(f, p.s, p.t, s.budget);
        json pj = pointJson(p);
        pj["vDim"] = rep.vDim;
        pj["unibranch"] = rep.unibranch;
        json bj = json::array();
        for (const auto& b : rep.branches) bj.push_back(branchJson(b, s.emitSeries));
        pj["branches"] = std::move(bj);
        jp.push_back(std::move(pj));
        text << "singular point (" << p.s.str() << ", " << p.t.str() << ") over "
             << fieldText(p.field) << ": " << rep.branches.size() << " branch(es), vDim "
             << rep.vDim << (rep.unibranch ? ", unibranch" : "") << "\n";
    }
    j["points"] = std::move(jp);
    emit(s, j, text.str());
    return 0;
}

int cmdBranches(Session& s, const std::string& pointText) {
    const MultiPoly& f = targetCurve(s);
    AlgNumber ps(0), pt(0);
    if (!pointText.empty() && pointText != "origin") {
        auto comma = pointText.find(',');
        if (comma == std::string::npos)
            throw ParseError("point must be a,b", 0);
        ps = parsePointCoord(pointText.substr(0, comma));
        pt = parsePointCoord(pointText.substr(comma + 1));
    }
    auto rep = analyzeSingularity(f, ps, pt, s.budget);
    json j;
    j["curve"] = f.str();
    j["point"] = json::array({ps.str(), pt.str()});
    json bj = json::array();
    std::ostringstream text;
    text << "curve: " << f.str() << " at (" << ps.str() << ", " << pt.str() << ")\n";
    for (std::size_t i = 0; i < rep.branches.size(); ++i) {
        const auto& b = rep.branches[i];
        bj.push_back(branchJson(b, true));
        text << "branch " << i << ": e=" << b.e << " field=" << fieldText(b.residueField)
             << " classSize=" << b.conjugacyClassSize << "\n"
             << "  S = " << b.S.str() << "\n"
             << "  T = " << b.T.str() << "\n";
    }
    j["branches"] = std::move(bj);
    j["vDim"] = rep.vDim;
    j["unibranch"] = rep.unibranch;
    text << "vDim " << rep.vDim << (rep.unibranch ? ", unibranch" : "") << "\n";
    emit(s, j, text.str());
    return 0;
}

int cmdParshin(Session& s, const std::string& formText, const std::string& chainText) {
    ChainSpec spec = parseChainSpec(chainText, s);
    const MultiPoly& f = s.curveTable.at(spec.curveName);

    auto compute = [&](const PrecisionBudget& b) {
        auto branches = newtonPuiseux(f, spec.ps, spec.pt, b);
        if (spec.branchIndex >= branches.size())
            throw DomainError("branch index out of range: the point has " +
                              std::to_string(branches.size()) + " branch(es)");
        Chain chain{f, spec.ps, spec.pt, branches[spec.branchIndex]};
        std::string t = trimmed(formText);
        ResidueValue rv = (!t.empty() && t.front() == '[')
                              ? parshinResidue(parseClass(t, s), chain, b)
                              : parshinResidue(parseForm2(t, s), chain, b);
        json j;
        j["value"] = rv.value.str();
        j["traced"] = rv.tracedValue.str();
        return std::pair<json, Chain>(std::move(j), std::move(chain));
    };

    auto [j, chain] = compute(s.budget);
    requireStable(s, [&](const PrecisionBudget& b) { return compute(b).first; }, j);
    if (s.emitSeries) {
        HenselPair hp = henselDeform(f, chain.branch, s.budget);
        json sj;
        sj["S"] = seriesJson(hp.S);
        sj["T"] = seriesJson(hp.T);
        sj["deformed"] = hp.deformedT ? "T" : "S";
        j["series"] = std::move(sj);
    }
    std::string shown = s.traced ? j["traced"].get<std::string>() : j["value"].get<std::string>();
    emit(s, j, shown + "\n");
    return 0;
}

int cmdSumcheck(Session& s, const std::string& formText, const std::string& pointText, bool p1) {
    json j;
    std::ostringstream text;
    AlgNumber total;
    if (p1) {
        auto [num, den] = parseForm1S(formText);
        auto compute = [&](const PrecisionBudget&) {
            GlobalResidueReport rep = globalResidueCheckP1(num, den);
            json r;
            json poles = json::array();
            for (const auto& p : rep.poles) {
                json pj;
                pj["location"] = p.location;
                pj["residue"] = p.traced.str();
                poles.push_back(std::move(pj));
            }
            r["poles"] = std::move(poles);
            r["total"] = rep.total.str();
            return std::pair<json, AlgNumber>(std::move(r), rep.total);
        };
        auto [r, tot] = compute(s.budget);
        requireStable(s, [&](const PrecisionBudget& b) { return compute(b).first; }, r);
        total = tot;
        j = std::move(r);
        for (const auto& p : j["poles"])
            text << p["location"].get<std::string>() << ": "
                 << p["residue"].get<std::string>() << "\n";
    } else {
        AlgNumber ps(0), pt(0);
        if (!pointText.empty() && pointText != "origin") {
            auto comma = pointText.find(',');
            if (comma == std::string::npos) throw ParseError("point must be a,b", 0);
            ps = parsePointCoord(pointText.substr(0, comma));
            pt = parsePointCoord(pointText.substr(comma + 1));
        }
        DiffForm2 w = parseForm2(formText, s);
        auto compute = [&](const PrecisionBudget& b) {
            LocalSumReport rep = localResidueTheoremCheck(w, ps, pt, b);
            json r;
            json terms = json::array();
            for (const auto& t : rep.terms) {
                json tj;
                tj["curve"] = t.curveText;
                tj["branch"] = t.branchIndex;
                tj["value"] = t.rv.value.str();
                tj["traced"] = t.rv.tracedValue.str();
                terms.push_back(std::move(tj));
            }
            r["terms"] = std::move(terms);
            r["total"] = rep.total.str();
            return std::pair<json, AlgNumber>(std::move(r), rep.total);
        };
        auto [r, tot] = compute(s.budget);
        requireStable(s, [&](const PrecisionBudget& b) { return compute(b).first; }, r);
        total = tot;
        j = std::move(r);
        for (const auto& t : j["terms"])
            text << t["curve"].get<std::string>() << " branch "
                 << t["branch"].get<std::size_t>() << ": "
                 << t["traced"].get<std::string>() << "\n";
    }
    bool pass = total.isZero();
    j["pass"] = pass;
    text << "total " << total.str() << (pass ? " (pass)" : " (FAIL)") << "\n";
    emit(s, j, text.str());
    return pass ? 0 : 5;
}

int cmdMembership(Session& s, const std::string& classText) {
    const MultiPoly& f = targetCurve(s);
    GeneralizedFraction cls = parseClass(classText, s);
    auto compute = [&](const PrecisionBudget& b) {
        auto pts = singularPoints(f);
        json j;
        j["curve"] = f.str();
        json mj;
        bool inL = true;
        json jp = json::array();
        for (const auto& p : pts) {
            auto rep = analyzeSingularity(f, p.s, p.t, b);
            auto m = testMembership(cls, rep, b);
            json pj = pointJson(p);
            pj["membership"] = membershipJson(m, s.traced);
            jp.push_back(std::move(pj));
            inL = inL && m.inL;
        }
        mj["inL"] = inL;
        mj["points"] = std::move(jp);
        j["membership"] = std::move(mj);
        return j;
    };
    json j = compute(s.budget);
    requireStable(s, compute, j);
    bool inL = j["membership"]["inL"].get<bool>();
    emit(s, j, std::string("inL ") + (inL ? "true" : "false") + "\n");
    return 0;
}

int cmdFclass(Session& s) {
    const MultiPoly& f = targetCurve(s);
    auto compute = [&](const PrecisionBudget& b) {
        auto pts = singularPoints(f);
        json j;
        j["curve"] = f.str();
        json fj;
        bool allZero = true;
        json jp = json::array();
        for (const auto& p : pts) {
            auto rep = analyzeSingularity(f, p.s, p.t, b);
            auto fc = fundamentalClassCheck(f, rep, b);
            json pj = pointJson(p);
            pj["ds"] = membershipJson(fc.dsComponent, s.traced);
            pj["dt"] = membershipJson(fc.dtComponent, s.traced);
            pj["allZero"] = fc.allZero;
            jp.push_back(std::move(pj));
            allZero = allZero && fc.allZero;
        }
        fj["allZero"] = allZero;
        fj["points"] = std::move(jp);
        j["fundamentalClass"] = std::move(fj);
        return j;
    };
    json j = compute(s.budget);
    requireStable(s, compute, j);
    bool allZero = j["fundamentalClass"]["allZero"].get<bool>();
    emit(s, j, std::string("allZero ") + (allZero ? "true" : "false") + "\n");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Parshin residues on affine plane curves"};
    app.require_subcommand(1);
    Session session = makeSession();

    std::vector<std::string> curveSing, curveBranches, curveMembership, curveFclass,
        curveParshin, curveSumcheck;
    std::string pointText, formText, chainText, classText, sumPoint;
    bool p1 = false;

    CLI::App* sing = app.add_subcommand("sing", "singular points and branch structure");
    registerCurveFlag(sing, session, curveSing);

    CLI::App* branches = app.add_subcommand("branches", "branch expansions at a point");
    registerCurveFlag(branches, session, curveBranches);
    branches->add_option("--point", pointText, "point a,b (default origin)");

    CLI::App* parshin = app.add_subcommand("parshin", "one residue along one chain");
    registerCurveFlag(parshin, session, curveParshin);
    parshin->add_option("--form", formText, "2-form or bracketed class")->required();
    parshin->add_option("--chain", chainText, "curve,origin,index or curve,a,b,index")
        ->required();

    CLI::App* sumcheck = app.add_subcommand("sumcheck", "residue-theorem identity check");
    registerCurveFlag(sumcheck, session, curveSumcheck);
    sumcheck->add_option("--form", formText, "form to sum")->required();
    sumcheck->add_option("--point", sumPoint, "point a,b for the local check");
    sumcheck->add_flag("--p1", p1, "global check on the projective line");

    CLI::App* membership = app.add_subcommand("membership", "intersection-cohomology test");
    registerCurveFlag(membership, session, curveMembership);
    membership->add_option("--class", classText, "[EXPR ds^dt / f^m]")->required();

    CLI::App* fclass = app.add_subcommand("fclass", "fundamental-class vanishing check");
    registerCurveFlag(fclass, session, curveFclass);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (sing->parsed()) {
            applyCurveArgs(session, curveSing);
            return cmdSing(session);
        }
        if (branches->parsed()) {
            applyCurveArgs(session, curveBranches);
            return cmdBranches(session, pointText);
        }
        if (parshin->parsed()) {
            applyCurveArgs(session, curveParshin);
            return cmdParshin(session, formText, chainText);
        }
        if (sumcheck->parsed()) {
            applyCurveArgs(session, curveSumcheck);
            return cmdSumcheck(session, formText, sumPoint, p1);
        }
        if (membership->parsed()) {
            applyCurveArgs(session, curveMembership);
            return cmdMembership(session, classText);
        }
        if (fclass->parsed()) {
            applyCurveArgs(session, curveFclass);
            return cmdFclass(session);
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const UnsupportedExtension& e) {
        std::cerr << "unsupported extension: " << e.what() << "\n";
        return 3;
    } catch (const PrecisionExhausted& e) {
        std::cerr << "precision exhausted: " << e.what() << "\n";
        return 4;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
