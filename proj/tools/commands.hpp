#pragma once

namespace CLI {
class App;
}

namespace comet::cli {

void register_extract(CLI::App& app);
void register_filter(CLI::App& app);
void register_stats(CLI::App& app);
void register_train(CLI::App& app);
void register_generate(CLI::App& app);
void register_bleu(CLI::App& app);
void register_vocab_overlap(CLI::App& app);

} // namespace comet::cli
