#pragma once

#include <string>

#include <json.hpp>

#include "tmdyn/configuration.hpp"
#include "tmdyn/gshift.hpp"
#include "tmdyn/machine.hpp"
#include "tmdyn/phi.hpp"
#include "tmdyn/regularity.hpp"
#include "tmdyn/words.hpp"

// JSON and CSV serializations of analysis results.
namespace tmdyn::report {

using nlohmann::ordered_json;

ordered_json phi_table_json(const TuringMachine& m, const PhiTable& table);
ordered_json graph_json(const TuringMachine& m, const EpsGraph& g);
ordered_json witness_json(const TuringMachine& m, const StrongWitness& w);
ordered_json witness_json(const TuringMachine& m, const RegularWitness& w);

/// {verdict, bound: {log_of, over, decimal} | null, direction, witness}
ordered_json certificate_json(const TuringMachine& m, const EntropyCertificate& cert);

ordered_json word_report_json(const TuringMachine& m, const WordCountReport& report);

/// Columns n, count, e_n, min_e_n; estimates printed with 20 significant digits.
std::string word_report_csv(const WordCountReport& report);

/// {radius, alphabet, default_rule, rules: [{window, G, F}]}
ordered_json gshift_json(const TuringMachine& m, const GeneralizedShift& d);

ordered_json conjugacy_json(const TuringMachine& m, const ConjugacyReport& r);

ordered_json configuration_json(const TuringMachine& m, const Configuration& x);

/// 64-bit FNV-1a of a document, as 16 hex digits.
std::string fingerprint(std::string_view text);

}  // namespace tmdyn::report
