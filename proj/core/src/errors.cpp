#include "fairdiv/errors.hpp"

namespace fairdiv {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::duplicate_good_in_ranking: return "DuplicateGoodInRanking";
    case Errc::ranking_length_mismatch: return "RankingLengthMismatch";
    case Errc::good_id_out_of_range: return "GoodIdOutOfRange";
    case Errc::invalid_instance: return "InvalidInstance";
    case Errc::invalid_profile: return "InvalidProfile";
    case Errc::invalid_allocation: return "InvalidAllocation";
    case Errc::k_too_large: return "KTooLarge";
    case Errc::zero_n: return "ZeroN";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::cap_exceeded: return "CapExceeded";
    case Errc::empty_market: return "EmptyMarket";
    case Errc::pick_without_ranked_good: return "PickWithoutRankedGood";
    case Errc::k_below_threshold: return "KBelowThreshold";
    case Errc::k_below_n: return "KBelowN";
    case Errc::k_zero: return "KZero";
    case Errc::m_not_greater_than_n: return "MNotGreaterThanN";
    case Errc::infeasible_deadlines: return "InfeasibleDeadlines";
    case Errc::alpha_out_of_range: return "AlphaOutOfRange";
    case Errc::top_k_sets_disagree: return "TopKSetsDisagree";
    case Errc::n_too_small: return "NTooSmall";
    case Errc::unknown_rule: return "UnknownRule";
    case Errc::bad_argument: return "BadArgument";
    case Errc::parse_error: return "ParseError";
  }
  return "UnknownError";
}

}  // namespace fairdiv
