#pragma once

#include <nlohmann/json.hpp>
#include <ostream>

#include "conradlab/conradian.hpp"
#include "conradlab/dynamics.hpp"
#include "conradlab/ordering.hpp"
#include "conradlab/presentation.hpp"
#include "conradlab/space.hpp"

namespace conradlab {

using Json = nlohmann::json;

// Integers serialize as JSON numbers when they fit 64 bits, decimal strings
// otherwise; rationals always as exact "p/q" strings.
Json int_to_json(const Int& x);
Int int_from_json(const Json& j);

Json quadratic_to_json(const QuadraticNumber& x);  // {"p":"3/4","q":"1","d":2}
QuadraticNumber quadratic_from_json(const Json& j);

Json family_fields(const Family& f);  // {"family":"BS","ell":2} / {"family":"T","n":3} ...
Family family_from_json(const Json& j);

Json element_to_json(const GroupElement& g);
GroupElement element_from_json(const Json& j);

Json descriptor_to_json(const OrderingDescriptor& ord);
OrderingDescriptor descriptor_from_json(const Json& j);

Json certificate_to_json(const CrossingCertificate& cert, const AffineAction* action = nullptr);
CrossingCertificate certificate_from_json(const Json& j);
/// Reconstructs the action recorded alongside an exported certificate.
AffineAction action_from_json(const Json& j);
Json action_to_json(const AffineAction& action);

Json conradian_report_to_json(const ConradianReport& r);
Json cone_report_to_json(const ConeAxiomReport& r);
Json convexity_report_to_json(const ConvexityReport& r);
Json bi_invariance_report_to_json(const BiInvarianceReport& r);
Json presentation_report_to_json(const PresentationReport& r);
Json rational_series_report_to_json(const RationalSeriesReport& r);
Json agreement_report_to_json(const AgreementReport& r, const OrderingDescriptor& a,
                              const OrderingDescriptor& b);
Json realization_check_to_json(const RealizationCheckReport& r);
Json epsilon_recovery_to_json(const EpsilonRecovery& r);
Json cantor_tree_to_json(const CantorTreeNode& node);

/// CSV export: header `element,t`, elements in compact form, t as an exact
/// fraction string.
void realization_to_csv(const RealizationTable& table, std::ostream& out);
RealizationTable realization_from_csv(const Family& fam, std::istream& in);

}  // namespace conradlab
