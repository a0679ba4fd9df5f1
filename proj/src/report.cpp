#include "fpg/report.hpp"

namespace fpg {

InvariantReport build_invariant_report(const GroupFacts& facts,
                                       std::span<const std::int64_t> primes) {
  const Presentation& p = facts.presentation;
  InvariantReport report;
  report.label = p.label;
  report.generators = static_cast<std::int64_t>(p.generator_count());
  report.relators = static_cast<std::int64_t>(p.relator_count());
  report.euler_complex = euler_char_complex(p);

  const DeficiencyInterval interval = deficiency_interval(facts);
  report.def_lower = interval.lower;
  report.def_upper = interval.upper;

  const AbelianizationResult ab = abelianization(p);
  report.b1 = ab.b1;
  report.torsion = ab.torsion;

  for (const std::int64_t prime : primes)
    report.betti_mod.push_back(betti_mod_p_complex(p, prime));

  // Closed-form first L2-Betti number where a hypothesis supplies one: an
  // orbifold normal form (recognized or tagged), or a free group.
  std::optional<OrbifoldSignature> signature;
  if (facts.family && facts.family->factors.size() == 1) {
    const FamilyFactor& f = facts.family->factors.front();
    if (f.kind() == FamilyFactor::Kind::surface)
      signature = OrbifoldSignature::make(f.parameter(), {});
    else if (f.kind() == FamilyFactor::Kind::orbifold)
      signature = f.signature();
    else if (f.kind() == FamilyFactor::Kind::free_group)
      report.l2_b1 = f.parameter() >= 1 ? Rational(f.parameter() - 1) : Rational(0);
  } else if (!facts.family) {
    if (const auto rec = recognize_orbifold_form(p))
      signature = rec->signature;
    else if (p.relator_count() == 0)
      report.l2_b1 = p.generator_count() >= 1
                         ? Rational(static_cast<std::int64_t>(p.generator_count()) - 1)
                         : Rational(0);
  }
  if (signature) report.l2_b1 = beta1_orbifold(*signature);

  report.verdict = classify(facts);
  return report;
}

Json to_json(const Presentation& p) {
  Json out;
  out["label"] = p.label;
  Json gens = Json::array();
  for (const GeneratorSymbol& g : p.generators) gens.push_back(g.name);
  out["generators"] = std::move(gens);
  Json rels = Json::array();
  for (const Word& r : p.relators) rels.push_back(to_string(r));
  out["relators"] = std::move(rels);
  return out;
}

Json to_json(const Verdict& v) {
  Json out;
  out["status"] = to_string(v.status);
  Json rules = Json::array();
  for (const RuleCitation& c : v.justification)
    rules.push_back(Json{{"id", c.rule}, {"citation", c.citation}});
  out["rules"] = std::move(rules);
  Json interval;
  interval["lower"] = v.interval.lower;
  if (v.interval.upper)
    interval["upper"] = *v.interval.upper;
  else
    interval["upper"] = nullptr;
  out["interval"] = std::move(interval);
  out["notes"] = v.notes;
  return out;
}

Json to_json(const InvariantReport& report) {
  Json out;
  out["label"] = report.label;
  out["generators"] = report.generators;
  out["relators"] = report.relators;
  out["def_lower"] = report.def_lower;
  if (report.def_upper)
    out["def_upper"] = *report.def_upper;
  else
    out["def_upper"] = nullptr;
  out["b1"] = report.b1;
  Json torsion = Json::array();
  for (const Integer& t : report.torsion) torsion.push_back(t.str());
  out["torsion"] = std::move(torsion);
  out["euler_complex"] = report.euler_complex;
  Json betti = Json::array();
  for (const ComplexBettiProfile& profile : report.betti_mod)
    betti.push_back(Json{{"p", profile.characteristic},
                         {"b0", profile.b0},
                         {"b1", profile.b1},
                         {"b2", profile.b2}});
  out["betti_mod"] = std::move(betti);
  if (report.l2_b1)
    out["l2_b1"] = to_string_fraction(*report.l2_b1);
  else
    out["l2_b1"] = nullptr;
  if (report.verdict)
    out["verdict"] = to_json(*report.verdict);
  else
    out["verdict"] = nullptr;
  return out;
}

Json to_json(const CosetTable& table) {
  Json out;
  out["index"] = table.index();
  Json action;
  const Presentation& base = table.base();
  for (std::size_t g = 0; g < base.generator_count(); ++g) {
    Json images = Json::array();
    for (std::int64_t c = 0; c < table.index(); ++c)
      images.push_back(table.image(c, g, 1) + 1);  // 1-based
    action[base.generators[g].name] = std::move(images);
  }
  out["action"] = std::move(action);
  Json gens = Json::array();
  for (const Word& w : table.subgroup_generators()) gens.push_back(to_string(w));
  out["subgroup_generators"] = std::move(gens);
  return out;
}

Json to_json(const RewrittenPresentation& rewritten) {
  Json out;
  Json gens = Json::array();
  for (const GeneratorSymbol& g : rewritten.generators) gens.push_back(g.name);
  out["generators"] = std::move(gens);
  Json rels = Json::array();
  for (const Word& r : rewritten.relators) rels.push_back(to_string(r));
  out["relators"] = std::move(rels);
  out["trivial_relators"] =
      static_cast<std::int64_t>(rewritten.trivial_relator_count());
  Json transversal = Json::array();
  for (const Word& w : rewritten.transversal) transversal.push_back(to_string(w));
  out["transversal"] = std::move(transversal);
  Json images;
  for (std::size_t i = 0; i < rewritten.generators.size(); ++i)
    images[rewritten.generators[i].name] = to_string(rewritten.generator_images[i]);
  out["generator_images"] = std::move(images);
  out["counts"] = Json{
      {"generators", static_cast<std::int64_t>(rewritten.generator_count())},
      {"relators", static_cast<std::int64_t>(rewritten.relator_count())},
      {"def_lower", static_cast<std::int64_t>(rewritten.generator_count()) -
                        static_cast<std::int64_t>(rewritten.relator_count())}};
  out["presentation"] = to_string(rewritten.simplified());
  return out;
}

Json to_json(const DeficiencyTableResult& table) {
  Json out;
  out["genus"] = table.genus;
  out["prime"] = table.prime;
  Json rows = Json::array();
  for (const DeficiencyTableRow& row : table.rows)
    rows.push_back(
        Json{{"label", row.label}, {"lower", row.lower}, {"upper", row.upper}});
  out["rows"] = std::move(rows);
  out["notes"] = table.notes;
  return out;
}

}  // namespace fpg
