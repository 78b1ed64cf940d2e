#include "hsnet/dataset.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <numeric>

#include "json.hpp"

#include "hsnet/errors.hpp"

namespace hsnet {
namespace {

constexpr std::uint32_t kIdxImageMagic = 0x00000803;
constexpr std::uint32_t kIdxLabelMagic = 0x00000801;
constexpr std::size_t kCifarSide = 32;
constexpr std::size_t kCifarPlane = kCifarSide * kCifarSide;
constexpr std::size_t kCifarRecord = 1 + 3 * kCifarPlane;
constexpr std::size_t kCifarClasses = 10;

std::vector<unsigned char> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::uint32_t read_be32(const std::vector<unsigned char>& bytes, std::size_t offset) {
  return (std::uint32_t{bytes[offset]} << 24) | (std::uint32_t{bytes[offset + 1]} << 16) |
         (std::uint32_t{bytes[offset + 2]} << 8) | std::uint32_t{bytes[offset + 3]};
}

std::string hex(std::uint32_t v) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string s = "0x";
  for (int shift = 28; shift >= 0; shift -= 4) s += kDigits[(v >> shift) & 0xF];
  return s;
}

void check_payload(const std::filesystem::path& path, std::size_t header, std::size_t expected,
                   std::size_t actual) {
  if (actual < header + expected) {
    throw ParseError(ParseErrorKind::Truncated,
                     path.string() + ": truncated payload (" + std::to_string(actual - header) +
                         " of " + std::to_string(expected) + " bytes)");
  }
  if (actual > header + expected) {
    throw ParseError(ParseErrorKind::BadFileSize,
                     path.string() + ": " + std::to_string(actual - header - expected) +
                         " trailing bytes after payload");
  }
}

void check_unit_range(const Tensor& features, const std::string& name) {
  for (double v : features.values()) {
    if (!(v >= 0.0 && v <= 1.0)) throw DataError(name + ": pixel value outside [0, 1]");
  }
}

}  // namespace

LabeledDataset::LabeledDataset(std::string name, Tensor features, std::vector<int> labels,
                               std::size_t num_classes)
    : name_(std::move(name)), labels_(std::move(labels)), num_classes_(num_classes) {
  if (features.rank() < 2) throw ShapeError(name_ + ": features need a sample axis");
  if (features.dim(0) != labels_.size()) {
    throw DataError(name_ + ": " + std::to_string(features.dim(0)) + " samples but " +
                    std::to_string(labels_.size()) + " labels");
  }
  sample_shape_.assign(features.shape().begin() + 1, features.shape().end());
  features_ = std::move(features);
  for (int label : labels_) {
    if (label < 0 || static_cast<std::size_t>(label) >= num_classes_) {
      throw DataError(name_ + ": label " + std::to_string(label) + " outside [0, " +
                      std::to_string(num_classes_) + ")");
    }
  }
}

LabeledDataset::LabeledDataset(std::string name, SparseRows features, std::vector<int> labels,
                               std::size_t num_classes)
    : name_(std::move(name)), labels_(std::move(labels)), num_classes_(num_classes) {
  if (features.vocab == 0) throw DataError(name_ + ": vocabulary size must be positive");
  if (features.rows.size() != labels_.size()) {
    throw DataError(name_ + ": " + std::to_string(features.rows.size()) + " samples but " +
                    std::to_string(labels_.size()) + " labels");
  }
  for (const auto& row : features.rows) {
    if (!row.empty() && row.back() >= features.vocab) {
      throw DataError(name_ + ": word index " + std::to_string(row.back()) + " >= vocab");
    }
  }
  for (int label : labels_) {
    if (label < 0 || static_cast<std::size_t>(label) >= num_classes_) {
      throw DataError(name_ + ": label " + std::to_string(label) + " outside [0, " +
                      std::to_string(num_classes_) + ")");
    }
  }
  sample_shape_ = {features.vocab};
  features_ = std::move(features);
}

const Tensor& LabeledDataset::dense_features() const {
  if (is_sparse()) throw DataError(name_ + ": dataset is sparse");
  return std::get<Tensor>(features_);
}

const SparseRows& LabeledDataset::sparse_features() const {
  if (!is_sparse()) throw DataError(name_ + ": dataset is dense");
  return std::get<SparseRows>(features_);
}

Tensor LabeledDataset::batch(std::span<const std::size_t> indices) const {
  if (indices.empty()) throw DataError(name_ + ": empty batch");
  Shape shape{indices.size()};
  shape.insert(shape.end(), sample_shape_.begin(), sample_shape_.end());
  Tensor out(shape, 0.0);
  const std::size_t width = shape_size(sample_shape_);
  for (std::size_t r = 0; r < indices.size(); ++r) {
    const std::size_t idx = indices[r];
    if (idx >= size()) throw DataError(name_ + ": sample index out of range");
    double* dst = out.data() + r * width;
    if (const auto* sparse = std::get_if<SparseRows>(&features_)) {
      for (std::uint32_t word : sparse->rows[idx]) dst[word] = 1.0;
    } else {
      const double* src = std::get<Tensor>(features_).data() + idx * width;
      std::copy(src, src + width, dst);
    }
  }
  return out;
}

std::vector<int> LabeledDataset::batch_labels(std::span<const std::size_t> indices) const {
  std::vector<int> out;
  out.reserve(indices.size());
  for (std::size_t idx : indices) out.push_back(labels_.at(idx));
  return out;
}

LabeledDataset LabeledDataset::select(std::span<const std::size_t> indices) const {
  std::vector<int> labels = batch_labels(indices);
  if (const auto* sparse = std::get_if<SparseRows>(&features_)) {
    SparseRows rows{sparse->vocab, {}};
    rows.rows.reserve(indices.size());
    for (std::size_t idx : indices) rows.rows.push_back(sparse->rows[idx]);
    return {name_, std::move(rows), std::move(labels), num_classes_};
  }
  return {name_, batch(indices), std::move(labels), num_classes_};
}

LabeledDataset load_idx(const std::filesystem::path& images, const std::filesystem::path& labels,
                        std::size_t num_classes) {
  const auto img = read_file(images);
  if (img.size() < 16) {
    throw ParseError(ParseErrorKind::Truncated, images.string() + ": shorter than IDX header");
  }
  if (const std::uint32_t magic = read_be32(img, 0); magic != kIdxImageMagic) {
    throw ParseError(ParseErrorKind::BadMagic,
                     images.string() + ": image magic " + hex(magic) + ", expected 0x00000803");
  }
  const std::size_t count = read_be32(img, 4);
  const std::size_t rows = read_be32(img, 8);
  const std::size_t cols = read_be32(img, 12);
  if (count == 0 || rows == 0 || cols == 0) {
    throw ParseError(ParseErrorKind::Malformed, images.string() + ": zero dimension in header");
  }
  check_payload(images, 16, count * rows * cols, img.size());

  const auto lab = read_file(labels);
  if (lab.size() < 8) {
    throw ParseError(ParseErrorKind::Truncated, labels.string() + ": shorter than IDX header");
  }
  if (const std::uint32_t magic = read_be32(lab, 0); magic != kIdxLabelMagic) {
    throw ParseError(ParseErrorKind::BadMagic,
                     labels.string() + ": label magic " + hex(magic) + ", expected 0x00000801");
  }
  const std::size_t label_count = read_be32(lab, 4);
  check_payload(labels, 8, label_count, lab.size());
  if (label_count != count) {
    throw ParseError(ParseErrorKind::CountMismatch,
                     std::to_string(count) + " images but " + std::to_string(label_count) +
                         " labels");
  }

  Tensor features({count, rows, cols, 1});
  for (std::size_t i = 0; i < features.size(); ++i) features[i] = img[16 + i] / 255.0;
  std::vector<int> y(count);
  for (std::size_t i = 0; i < count; ++i) {
    y[i] = lab[8 + i];
    if (static_cast<std::size_t>(y[i]) >= num_classes) {
      throw ParseError(ParseErrorKind::BadLabel,
                       labels.string() + ": label " + std::to_string(y[i]) + " at record " +
                           std::to_string(i));
    }
  }
  check_unit_range(features, images.filename().string());
  return {images.filename().string(), std::move(features), std::move(y), num_classes};
}

LabeledDataset load_cifar10(std::span<const std::filesystem::path> batch_paths) {
  if (batch_paths.empty()) throw ConfigError("no CIFAR-10 batch files given");
  std::vector<std::vector<unsigned char>> files;
  std::size_t total = 0;
  for (const auto& path : batch_paths) {
    auto bytes = read_file(path);
    if (bytes.empty() || bytes.size() % kCifarRecord != 0) {
      throw ParseError(ParseErrorKind::BadFileSize,
                       path.string() + ": size " + std::to_string(bytes.size()) +
                           " is not a positive multiple of 3073");
    }
    total += bytes.size() / kCifarRecord;
    files.push_back(std::move(bytes));
  }

  Tensor features({total, kCifarSide, kCifarSide, 3});
  std::vector<int> labels(total);
  std::size_t n = 0;
  for (std::size_t f = 0; f < files.size(); ++f) {
    const auto& bytes = files[f];
    for (std::size_t off = 0; off < bytes.size(); off += kCifarRecord, ++n) {
      const unsigned char label = bytes[off];
      if (label >= kCifarClasses) {
        throw ParseError(ParseErrorKind::BadLabel,
                         batch_paths[f].string() + ": label byte " + std::to_string(label) +
                             " at record " + std::to_string(off / kCifarRecord));
      }
      labels[n] = label;
      const unsigned char* planes = bytes.data() + off + 1;
      double* dst = features.data() + n * 3 * kCifarPlane;
      for (std::size_t p = 0; p < kCifarPlane; ++p) {
        for (std::size_t c = 0; c < 3; ++c) dst[p * 3 + c] = planes[c * kCifarPlane + p] / 255.0;
      }
    }
  }
  check_unit_range(features, "cifar10");
  return {"cifar10", std::move(features), std::move(labels), kCifarClasses};
}

LabeledDataset load_text_jsonl(const std::filesystem::path& path, std::size_t vocab,
                               std::optional<std::size_t> num_classes) {
  if (vocab == 0) throw ConfigError("vocabulary size must be positive");
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());

  SparseRows rows{vocab, {}};
  std::vector<int> labels;
  std::string line;
  std::size_t line_no = 0;
  auto fail = [&](ParseErrorKind kind, const std::string& why) {
    throw ParseError(kind, path.string() + ":" + std::to_string(line_no) + ": " + why, line_no);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    nlohmann::json obj;
    try {
      obj = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      fail(ParseErrorKind::Malformed, e.what());
    }
    if (!obj.is_object()) fail(ParseErrorKind::Malformed, "expected a JSON object");
    const auto label_it = obj.find("label");
    const auto indices_it = obj.find("indices");
    if (label_it == obj.end() || !label_it->is_number_integer()) {
      fail(ParseErrorKind::Malformed, "missing integer \"label\"");
    }
    if (indices_it == obj.end() || !indices_it->is_array()) {
      fail(ParseErrorKind::Malformed, "missing array \"indices\"");
    }
    const auto label = label_it->get<std::int64_t>();
    if (label < 0 || (num_classes && static_cast<std::size_t>(label) >= *num_classes)) {
      fail(ParseErrorKind::BadLabel, "label " + std::to_string(label) + " out of range");
    }
    std::vector<std::uint32_t> words;
    words.reserve(indices_it->size());
    for (const auto& v : *indices_it) {
      if (!v.is_number_integer()) fail(ParseErrorKind::Malformed, "non-integer word index");
      const auto idx = v.get<std::int64_t>();
      if (idx < 0) fail(ParseErrorKind::Malformed, "negative word index");
      if (static_cast<std::uint64_t>(idx) < vocab) words.push_back(static_cast<std::uint32_t>(idx));
    }
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    rows.rows.push_back(std::move(words));
    labels.push_back(static_cast<int>(label));
  }
  if (labels.empty()) throw ParseError(ParseErrorKind::Malformed, path.string() + ": no samples");
  const std::size_t k =
      num_classes.value_or(static_cast<std::size_t>(*std::max_element(labels.begin(), labels.end())) + 1);
  return {path.stem().string(), std::move(rows), std::move(labels), k};
}

Tensor multi_hot(std::span<const std::int64_t> indices, std::size_t vocab) {
  Tensor out({vocab}, 0.0);
  for (std::int64_t idx : indices) {
    if (idx < 0 || static_cast<std::uint64_t>(idx) >= vocab) {
      throw DataError("word index " + std::to_string(idx) + " outside vocabulary of " +
                      std::to_string(vocab));
    }
    out[static_cast<std::size_t>(idx)] = 1.0;
  }
  return out;
}

std::vector<std::size_t> shuffled_indices(std::size_t n, Rng& rng) {
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  for (std::size_t i = n; i > 1; --i) std::swap(idx[i - 1], idx[rng.below(i)]);
  return idx;
}

LabeledDataset subset(const LabeledDataset& data, std::size_t n, Rng& rng) {
  if (n == 0 || n > data.size()) {
    throw ConfigError("subset size " + std::to_string(n) + " outside [1, " +
                      std::to_string(data.size()) + "]");
  }
  std::vector<std::size_t> idx(data.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = i + rng.below(data.size() - i);
    std::swap(idx[i], idx[j]);
  }
  idx.resize(n);
  return data.select(idx);
}

}  // namespace hsnet
