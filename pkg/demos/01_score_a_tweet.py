"""
Scoring a single tweet, step by step
====================================

Walks one tweet through the three scoring stages: sentence
segmentation, tokenization, and dictionary matching.
"""

from pulso import analyze_tweet, score_sentence, segment_sentences, tokenize, tweet_score
from pulso.defaults import default_lexicon

lexicon = default_lexicon()

text = "Scioli cierra con la CaravanaNaranja! Vamos #FPV http://t.co/abc"

# Stage 1: split on sentence enders (. ! ? and newlines).
sentences = segment_sentences(text)
print("sentences:", sentences)

# Stage 2: per sentence, lowercase and strip punctuation from the edges
# of each whitespace token.  The marker of a #hashtag or @mention
# survives, and links are dropped.
for sentence in sentences:
    print(f"  {sentence!r} -> {tokenize(sentence)}")

# Stage 3: scan the tokens against the dictionaries.  Candidate names
# claim the sentence, sentiment words add +1 or -1.  Here "scioli" is
# the attribute and "caravananaranja" is a positive word.
first = tokenize(sentences[0])
result = score_sentence(first, lexicon, text=sentences[0])
print("attribute:", result.attribute, "score:", result.score)

# The shortcut form runs all three stages and returns one entry per
# sentence.  "#fpv" is a synonym of scioli, so the second sentence is
# attributed to him even though his name never appears.
for entry in analyze_tweet(text, lexicon):
    print(f"  {entry.text!r}: attribute={entry.attribute} score={entry.score}")

# Hash marks matter.  "#cambiemos" is a synonym of macri and claims the
# sentence; the bare word "cambiemos" sits in the positive list, so
# without the hash the same sentence is just praise with no attribute.
tagged = score_sentence(tokenize("Vamos #Cambiemos"), lexicon)
plain = score_sentence(tokenize("Vamos cambiemos"), lexicon)
print("with hash:", tagged.attribute, tagged.score)
print("without hash:", plain.attribute, plain.score)

# Longest match wins inside a class.  The bundled negative list has
# both "aníbal" and "anibal fernandez"; the two-word phrase is consumed
# in one step so the sentence scores -1, not -2.
campaign = tokenize("Anibal Fernandez otra vez no")
print("phrase score:", score_sentence(campaign, lexicon).score)

# A tweet's label is the sign of its summed sentence scores.
scores = [entry.score for entry in analyze_tweet(text, lexicon)]
print("tweet label:", tweet_score(scores).text)
