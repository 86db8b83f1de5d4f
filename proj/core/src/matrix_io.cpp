#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "emojiprof/features.hpp"
#include "text_util.hpp"

namespace emojiprof {

void write_matrix_csv(const LabeledMatrix& m, std::ostream& out) {
  out << "user_id,label,emoji_msg_count";
  for (const auto& c : m.manifest.columns) out << ',' << c;
  out << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << m.row_ids[i] << ',' << to_string(label_gender(m.y[i])) << ',' << m.emoji_msg_counts[i];
    for (double v : m.x.row(i)) out << ',' << detail::format_double(v);
    out << '\n';
  }
}

LabeledMatrix read_matrix_csv(std::istream& in, const FeatureManifest& manifest) {
  std::string line;
  if (!std::getline(in, line)) throw FormatError("feature matrix is empty");
  const auto header = detail::split(line, ',');
  if (header.size() != manifest.columns.size() + 3 || header[0] != "user_id" || header[1] != "label" ||
      header[2] != "emoji_msg_count") {
    throw ConsistencyError("feature matrix header does not match the manifest");
  }
  for (std::size_t c = 0; c < manifest.columns.size(); ++c) {
    if (header[c + 3] != manifest.columns[c]) {
      throw ConsistencyError("feature matrix column " + std::string(header[c + 3]) + " does not match the manifest");
    }
  }
  LabeledMatrix m;
  m.manifest = manifest;
  m.x = Matrix(0, manifest.columns.size());
  std::vector<double> row(manifest.columns.size());
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto fields = detail::split(line, ',');
    if (fields.size() != header.size()) throw ParseError(line_no, "wrong number of fields");
    if (fields[1] != "F" && fields[1] != "M") throw ParseError(line_no, "label must be F or M");
    double count = 0.0;
    if (!detail::parse_double(fields[2], count) || count < 0) throw ParseError(line_no, "bad emoji_msg_count");
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (!detail::parse_double(fields[c + 3], row[c])) throw ParseError(line_no, "non-numeric feature value");
    }
    m.row_ids.emplace_back(fields[0]);
    m.y.push_back(fields[1] == "M" ? 1 : 0);
    m.emoji_msg_counts.push_back(static_cast<std::uint64_t>(count));
    m.x.append_row(row);
  }
  if (in.bad()) throw IoError("failed reading feature matrix");
  return m;
}

namespace {

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

void save_features(const LabeledMatrix& m, const std::filesystem::path& csv, const std::filesystem::path& manifest) {
  std::ofstream out(csv, std::ios::binary);
  if (!out) throw IoError("cannot write " + csv.string());
  write_matrix_csv(m, out);
  std::ofstream mout(manifest, std::ios::binary);
  if (!mout) throw IoError("cannot write " + manifest.string());
  mout << m.manifest.to_json() << '\n';
  if (!out || !mout) throw IoError("failed writing feature files");
}

LabeledMatrix load_features(const std::filesystem::path& csv, const std::filesystem::path& manifest) {
  const auto man = FeatureManifest::from_json(slurp(manifest));
  std::ifstream in(csv, std::ios::binary);
  if (!in) throw IoError("cannot open " + csv.string());
  return read_matrix_csv(in, man);
}

}  // namespace emojiprof
