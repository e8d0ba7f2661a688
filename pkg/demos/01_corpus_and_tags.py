"""Build a small synthetic corpus and run captions through the tag pipeline.

    python demos/01_corpus_and_tags.py [OUT_DIR]
"""

import sys
import tempfile
from pathlib import Path

import numpy as np

from soundseed.audio_io import SynthSpec, read_wav, synth_clip, synth_corpus
from soundseed.tagging import Gazetteer, caption_to_tags, clean_tags, sample_tags

out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(tempfile.mkdtemp(prefix="soundseed-"))

# every synthetic clip comes with tags that describe it truthfully
for spec in [SynthSpec("sine", 1.0, 0.5, pitch_hz=300.0),
             SynthSpec("chord", 1.0, 0.5, pitch_hz=600.0, seed=2),
             SynthSpec("click-track", 2.0, 0.8, bpm=120)]:
    clip, tags = synth_clip(spec)
    print(f"{spec.kind:12s} {clip.duration_s:.2f} s  peak {np.abs(clip.samples).max():.2f}  tags {list(tags)}")

entries = synth_corpus(out / "corpus", hours=0.01, seed=0)
print(f"\n{len(entries)} tracks written to {out / 'corpus'}")
first = entries[0]
print(f"first track: {first.path} {first.tags.to_list()} ({len(read_wav(out / 'corpus' / first.path))} samples)")

# captions stand in for a video-understanding model's description of a clip
gaz = Gazetteer.load()
rng = np.random.default_rng(0)
for caption in ["An upbeat electronic track with a synthesizer lead at 128 bpm",
                "Low quality recording of a calm piano and soft strings, slow and dreamy",
                "Jazz guitar, bass, drums, saxophone, trumpet, piano, organ, violin, cello and flute"]:
    found = caption_to_tags(caption, gaz)
    kept = sample_tags(clean_tags(found), 8, rng)
    print(f"\n{caption}\n  matched {found.to_list()}\n  kept    {kept.to_list()}")
