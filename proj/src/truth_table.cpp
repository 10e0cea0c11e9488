#include "zhegalkin/truth_table.hpp"

#include "zhegalkin/errors.hpp"

namespace zhegalkin {

TruthTable parse_truth_table(std::string_view text) {
  return TruthTable(text::parse_grid(text));
}

std::string serialize(const TruthTable& table) { return text::serialize_grid(table); }

boost::multiprecision::cpp_int count_functions(std::int64_t k, std::int64_t n) {
  if (n < 1) throw ContractError("n must be at least 1");
  const Modulus modulus(k);
  const auto exponent = checked_power(modulus.value(), static_cast<std::size_t>(n), 64);
  return boost::multiprecision::pow(boost::multiprecision::cpp_int(k),
                                    static_cast<unsigned>(exponent));
}

}  // namespace zhegalkin
