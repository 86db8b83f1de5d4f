#include "emojiprof/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <unordered_set>

#include "emojiprof/error.hpp"
#include "emojiprof/unicode.hpp"
#include "json.hpp"

namespace emojiprof {

using nlohmann::json;

std::string_view to_string(Gender g) noexcept { return g == Gender::Female ? "F" : "M"; }

std::optional<Message> parse_message(std::string_view line, std::string& reason) {
  if (!unicode::is_valid_utf8(line)) {
    reason = "invalid UTF-8";
    return std::nullopt;
  }
  json j = json::parse(line.begin(), line.end(), nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) {
    reason = "invalid JSON";
    return std::nullopt;
  }
  if (!j.is_object()) {
    reason = "not a JSON object";
    return std::nullopt;
  }
  Message m;

  const auto uid = j.find("user_id");
  if (uid == j.end() || uid->is_null()) {
    reason = "missing user_id";
    return std::nullopt;
  }
  if (!uid->is_string() || uid->get_ref<const std::string&>().empty()) {
    reason = "invalid user_id";
    return std::nullopt;
  }
  m.user_id = uid->get<std::string>();

  if (const auto g = j.find("gender"); g != j.end() && !g->is_null()) {
    if (!g->is_string()) {
      reason = "invalid gender";
      return std::nullopt;
    }
    const auto& s = g->get_ref<const std::string&>();
    if (s == "F") {
      m.gender = Gender::Female;
    } else if (s == "M") {
      m.gender = Gender::Male;
    } else {
      reason = "invalid gender";
      return std::nullopt;
    }
  }

  if (const auto l = j.find("lang"); l != j.end() && !l->is_null()) {
    if (!l->is_string()) {
      reason = "invalid lang";
      return std::nullopt;
    }
    m.lang = l->get<std::string>();
  }

  if (const auto t = j.find("timestamp"); t != j.end() && !t->is_null()) {
    if (!t->is_number_integer()) {
      reason = "invalid timestamp";
      return std::nullopt;
    }
    m.timestamp = t->get<std::int64_t>();
  }

  const auto text = j.find("text");
  if (text == j.end() || text->is_null()) {
    reason = "missing text";
    return std::nullopt;
  }
  if (!text->is_string()) {
    reason = "invalid text";
    return std::nullopt;
  }
  m.text = text->get<std::string>();
  return m;
}

std::string to_jsonl(const Message& m) {
  json j = json::object();
  j["user_id"] = m.user_id;
  j["gender"] = m.gender ? json(std::string(to_string(*m.gender))) : json(nullptr);
  j["lang"] = m.lang ? json(*m.lang) : json(nullptr);
  j["timestamp"] = m.timestamp ? json(*m.timestamp) : json(nullptr);
  j["text"] = m.text;
  return j.dump();
}

IngestResult ingest(std::istream& in) {
  static constexpr std::size_t kMaxSamples = 20;
  IngestResult result;
  auto& report = result.report;
  std::unordered_set<std::string> users;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    ++report.lines;
    std::string reason;
    auto msg = parse_message(line, reason);
    if (!msg) {
      ++report.rejected;
      ++report.rejection_reasons[reason];
      if (report.sample_rejections.size() < kMaxSamples) report.sample_rejections.emplace_back(line_no, reason);
      continue;
    }
    ++report.accepted;
    users.insert(msg->user_id);
    result.corpus.messages.push_back(std::move(*msg));
  }
  if (in.bad()) throw IoError("failed reading corpus stream");
  report.distinct_users = users.size();
  if (report.lines > 0 && 2 * report.rejected > report.lines) {
    throw FormatError(std::to_string(report.rejected) + " of " + std::to_string(report.lines) +
                      " lines rejected; input does not look like a message corpus");
  }
  return result;
}

IngestResult ingest_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open corpus '" + path.string() + "'");
  return ingest(in);
}

Corpus filter_time_window(const Corpus& corpus, std::optional<std::int64_t> from,
                          std::optional<std::int64_t> to) {
  if (from && to && *to <= *from) throw ArgumentError("time window end must be after its start");
  Corpus out;
  for (const auto& m : corpus.messages) {
    if (from || to) {
      if (!m.timestamp) continue;
      if (from && *m.timestamp < *from) continue;
      if (to && *m.timestamp >= *to) continue;
    }
    out.messages.push_back(m);
  }
  return out;
}

void CountHistogram::add(std::uint32_t value, std::uint64_t times) {
  if (times == 0) return;
  bins_[value] += times;
  total_ += times;
  sum_ += static_cast<std::uint64_t>(value) * times;
}

void CountHistogram::merge(const CountHistogram& other) {
  for (const auto& [v, n] : other.bins_) add(v, n);
}

std::uint32_t CountHistogram::max() const {
  if (bins_.empty()) throw UndefinedError("max of an empty histogram");
  return bins_.rbegin()->first;
}

double CountHistogram::mean() const {
  if (total_ == 0) throw UndefinedError("mean of an empty histogram");
  return static_cast<double>(sum_) / static_cast<double>(total_);
}

std::uint32_t CountHistogram::value_at_rank(std::uint64_t rank) const {
  std::uint64_t seen = 0;
  for (const auto& [v, n] : bins_) {
    seen += n;
    if (rank < seen) return v;
  }
  return bins_.rbegin()->first;
}

double CountHistogram::median() const {
  if (total_ == 0) throw UndefinedError("median of an empty histogram");
  if (total_ % 2 == 1) return value_at_rank(total_ / 2);
  const double lo = value_at_rank(total_ / 2 - 1);
  const double hi = value_at_rank(total_ / 2);
  return (lo + hi) / 2.0;
}

std::vector<std::uint32_t> CountHistogram::sorted_values() const {
  std::vector<std::uint32_t> out;
  out.reserve(total_);
  for (const auto& [v, n] : bins_) out.insert(out.end(), n, v);
  return out;
}

void PatternCounts::add(const MessagePatternFlags& f) {
  emoji_only += f.emoji_only;
  single_emoji_in_text += f.single_emoji_in_text;
  multi_nonconsecutive += f.multi_nonconsecutive;
  multi_consecutive += f.multi_consecutive;
  repeating += f.repeating;
}

void PatternCounts::merge(const PatternCounts& o) {
  emoji_only += o.emoji_only;
  single_emoji_in_text += o.single_emoji_in_text;
  multi_nonconsecutive += o.multi_nonconsecutive;
  multi_consecutive += o.multi_consecutive;
  repeating += o.repeating;
}

}  // namespace emojiprof
