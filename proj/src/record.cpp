#include "cuspidal/record.hpp"

#include <array>
#include <utility>

namespace cusp {

namespace {

constexpr std::array<std::pair<FamilyKind, const char*>, 14> kKindNames{{
    {FamilyKind::AMS, "ams"},
    {FamilyKind::KashiwaraIIge, "kashiwara-ii-ge"},
    {FamilyKind::KashiwaraIIsp, "kashiwara-ii-sp"},
    {FamilyKind::KashiwaraIIplusGe, "kashiwara-ii-plus-ge"},
    {FamilyKind::KashiwaraIIplusSp, "kashiwara-ii-plus-sp"},
    {FamilyKind::KashiwaraIIminusGe, "kashiwara-ii-minus-ge"},
    {FamilyKind::KashiwaraIIminusSp, "kashiwara-ii-minus-sp"},
    {FamilyKind::TonoIa, "tono-ia"},
    {FamilyKind::TonoIb, "tono-ib"},
    {FamilyKind::TonoIIa, "tono-iia"},
    {FamilyKind::TonoIIb, "tono-iib"},
    {FamilyKind::Orevkov, "orevkov"},
    {FamilyKind::OrevkovStar, "orevkov-star"},
    {FamilyKind::SmoothConic, "smooth-conic"},
}};

std::string join(const std::vector<int64_t>& v, size_t from = 0) {
    std::string s;
    for (size_t i = from; i < v.size(); ++i) s += (i > from ? "," : "") + std::to_string(v[i]);
    return s;
}

}  // namespace

std::string kind_name(FamilyKind k) {
    for (const auto& [kind, name] : kKindNames)
        if (kind == k) return name;
    return "unknown";
}

std::optional<FamilyKind> kind_from_name(const std::string& name) {
    for (const auto& [kind, n] : kKindNames)
        if (name == n) return kind;
    return std::nullopt;
}

std::string describe(const FamilySpec& f) {
    const auto& p = f.params;
    switch (f.kind) {
        case FamilyKind::AMS: return "AMS[" + join(p) + "]";
        case FamilyKind::KashiwaraIIge: return "Kashiwara II_ge(l=" + join(p) + ")";
        case FamilyKind::KashiwaraIIsp: return "Kashiwara II_sp(l=" + join(p) + ")";
        case FamilyKind::KashiwaraIIplusGe:
        case FamilyKind::KashiwaraIIplusSp:
        case FamilyKind::KashiwaraIIminusGe:
        case FamilyKind::KashiwaraIIminusSp: {
            std::string t = f.kind == FamilyKind::KashiwaraIIplusGe   ? "II+_ge"
                            : f.kind == FamilyKind::KashiwaraIIplusSp ? "II+_sp"
                            : f.kind == FamilyKind::KashiwaraIIminusGe ? "II-_ge"
                                                                       : "II-_sp";
            if (p.size() < 2) return "Kashiwara " + t + "(" + join(p) + ")";
            return "Kashiwara " + t + "(l=" + std::to_string(p[0]) + ",N=" + std::to_string(p[1]) +
                   ";lambda=" + join(p, 2) + ")";
        }
        case FamilyKind::TonoIa: return "Tono I(a)(a=" + join(p) + ")";
        case FamilyKind::TonoIb:
            return p.size() == 2 ? "Tono I(b)(a=" + std::to_string(p[0]) + ",s=" + std::to_string(p[1]) + ")"
                                 : "Tono I(b)(" + join(p) + ")";
        case FamilyKind::TonoIIa: return "Tono II(a)(n=" + join(p) + ")";
        case FamilyKind::TonoIIb:
            return p.size() == 2 ? "Tono II(b)(n=" + std::to_string(p[0]) + ",s=" + std::to_string(p[1]) + ")"
                                 : "Tono II(b)(" + join(p) + ")";
        case FamilyKind::Orevkov: return "Orevkov C_4k(k=" + join(p) + ")";
        case FamilyKind::OrevkovStar: return "Orevkov C*_4k(k=" + join(p) + ")";
        case FamilyKind::SmoothConic: return "smooth conic";
    }
    return "unknown";
}

std::string to_string(Kodaira k) {
    switch (k) {
        case Kodaira::minus_infinity: return "-inf";
        case Kodaira::one: return "1";
        case Kodaira::two: return "2";
    }
    return "?";
}

std::string to_string(Existence e) {
    switch (e) {
        case Existence::proved_base: return "proved-base";
        case Existence::proved_reduction: return "proved-reduction";
        case Existence::proved_lemma212: return "proved-lemma212";
        case Existence::proved_family: return "proved-family";
        case Existence::candidate: return "candidate";
    }
    return "?";
}

bool is_proved(Existence e) { return e != Existence::candidate; }

std::string to_string(Rule r) {
    switch (r) {
        case Rule::Lemma211: return "lemma211";
        case Rule::Lemma212: return "lemma212";
        case Rule::Base: return "base";
    }
    return "?";
}

CurveRecord make_record(int64_t degree, const NewtonPairSeq& n) {
    if (degree < 1) throw DomainError("degree must be >= 1");
    CurveRecord r;
    r.degree = degree;
    r.newton = n;
    r.puiseux = newton_to_puiseux(n);
    r.mult = multiplicity_sequence(n);
    r.delta = delta_from_puiseux(r.puiseux);
    r.semigroup_generators = generators_from_newton(n);
    r.lct = lct(r.puiseux);
    r.self_intersection = self_intersection(degree, r.puiseux);
    return r;
}

CurveRecord smooth_conic_record() {
    CurveRecord r;
    r.degree = 2;
    r.delta = 0;
    r.semigroup_generators = {1};
    r.lct = 1;
    r.self_intersection = 4;
    r.family = FamilySpec{FamilyKind::SmoothConic, {}};
    r.kodaira = Kodaira::minus_infinity;
    r.existence = Existence::proved_base;
    return r;
}

std::string check_record(const CurveRecord& r) {
    if (r.newton.empty()) {
        if (r.degree == 2 && r.delta == 0 && r.mult.empty()) return "";
        return "record without Newton pairs is not the smooth conic";
    }
    CurveRecord fresh = make_record(r.degree, r.newton);
    if (fresh.puiseux != r.puiseux) return "Puiseux pairs differ from recomputation";
    if (fresh.mult != r.mult) return "multiplicity sequence differs from recomputation";
    if (fresh.delta != r.delta) return "delta differs from recomputation";
    if (fresh.semigroup_generators != r.semigroup_generators) return "semigroup generators differ";
    if (fresh.lct != r.lct) return "lct differs from recomputation";
    if (fresh.self_intersection != r.self_intersection) return "self-intersection differs";
    if (r.delta != genus_target(r.degree)) return "delta != (d-1)(d-2)/2";
    return "";
}

bool canonical_less(const CurveRecord& a, const CurveRecord& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.newton < b.newton;
}

}  // namespace cusp
