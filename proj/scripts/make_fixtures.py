#!/usr/bin/env python3
"""Regenerates the fixture corpora under data/fixtures/.

Fully deterministic: vocabulary and document assignments come from fixed
lists and modular arithmetic, so reruns are byte-identical.

Synthetic separation corpus layout (data/fixtures/synthetic/):
  - 10 topic documents, 9 claims each, in two dependency trees
    (apparatus claims 1-3 + 7-9, method claims 4-6). Shallow claims carry
    one-off "junk" terms (each shared with exactly two distractor
    documents); deep claims carry per-topic theme terms and, in the
    deepest specialization nodes, novelty terms shared only with the
    relevant documents.
  - 3 relevant documents per topic: two in family FAMA<t>, one in FAMB<t>.
  - 15 distractor documents holding the junk vocabulary at volume, plus
    one German document that the pipeline must skip.

Every topic claim ships with a bracketed constituency parse built from
the same templates.
"""

import json
import os

OUT = os.path.join(os.path.dirname(__file__), "..", "data", "fixtures")

PREFIXES = [
    "thermo", "hydro", "servo", "cryo", "ferro", "piezo", "magneto", "turbo",
    "micro", "nano", "electro", "photo", "aero", "astro", "baro", "chrono",
    "dyna", "gyro", "helio", "iono", "kine", "litho", "mono", "neuro",
]
SUFFIXES = [
    "flange", "gasket", "manifold", "sprocket", "bushing", "camshaft",
    "solenoid", "dampener", "actuator", "bearing", "coupler", "gimbal",
    "nozzle", "impeller", "stator", "plunger", "tappet", "trunnion",
    "derrick", "mandrel", "spindle", "collet", "ratchet", "pawl", "detent",
    "keyway", "gudgeon", "fairlead", "bollard", "capstan",
]
JUNK = [p + s for p in PREFIXES for s in SUFFIXES]  # 720 terms
JUNK_PER_TOPIC = 72

DOMS = ["cement", "textile", "beverage", "marine", "dental",
        "forestry", "poultry", "railway", "quarry", "signal"]

THEME_ROOTS = ["zircon", "wolfram", "corund", "feldspat", "dolomit",
               "magnesit", "bauxit", "galen", "spinell", "olivin"]
THEME_SUFFIXES = ["ite", "ide", "ene", "ane", "ol", "ox",
                  "yn", "ur", "on", "um", "ax", "od"]  # porter-inert

NOV_ROOTS = ["kryptan", "vorlan", "selvin", "quorit", "threnod",
             "pelagor", "mirnov", "caldrex", "ossifren", "yttrev"]
NOV_SUFFIXES = ["ium", "esite", "olon"]


def themes_of(t):
    return [THEME_ROOTS[t] + s for s in THEME_SUFFIXES]


def novelties_of(t):
    return [NOV_ROOTS[t] + s for s in NOV_SUFFIXES]


def junk_of(t):
    return JUNK[t * JUNK_PER_TOPIC:(t + 1) * JUNK_PER_TOPIC]


def np_leaves(words, tags=None):
    out = []
    for i, w in enumerate(words):
        tag = tags[i] if tags else "NN"
        out.append(f"({tag} {w})")
    return " ".join(out)


def comp_claim_text(dom, kind, head, junk24, conj_noun):
    # kind: "apparatus"/"method" independent claim with a component list
    groups = [junk24[i:i + 3] for i in range(0, 24, 3)]
    parts = [f"a {g[0]} {g[1]} {g[2]} {conj_noun}" for g in groups]
    listing = ", ".join(parts[:-1]) + " and " + parts[-1]
    return f"A {dom} {head} {kind} comprising {listing}."


def comp_claim_ptb(dom, kind, head, junk24, conj_noun):
    groups = [junk24[i:i + 3] for i in range(0, 24, 3)]
    conjuncts = []
    for i, g in enumerate(groups):
        np = f"(NP (DT a) {np_leaves(g)} (NN {conj_noun}))"
        if i < len(groups) - 1:
            conjuncts.append(np + " (, ,)")
        else:
            conjuncts.insert(len(conjuncts), "(CC and) " + np)
    obj = "(NP " + " ".join(conjuncts) + ")"
    subj = f"(NP (DT A) (NN {dom}) (NN {head}) (NN {kind}))"
    return f"(ROOT (NP {subj} (VP (VBG comprising) {obj}) (. .)))"


def dep_claim_text(dom, kind, head, ref, nouns, noun_head, verb, tail):
    listing = " ".join(nouns)
    return (f"The {dom} {head} {kind} according to claim {ref}, "
            f"characterized in that the {listing} {noun_head} {verb} {tail}.")


def dep_claim_ptb(dom, kind, head, ref, nouns, noun_head, predicate_ptb):
    subj = (f"(NP (NP (DT The) (NN {dom}) (NN {head}) (NN {kind})) "
            f"(PP (VBG according) (PP (TO to) (NP (NN claim) (CD {ref})))))")
    clause_np = f"(NP (DT the) {np_leaves(nouns)} (NNS {noun_head}))"
    sbar = f"(SBAR (IN that) (S {clause_np} {predicate_ptb}))"
    return (f"(ROOT (NP {subj} (, ,) (VP (VBN characterized) "
            f"(PP (IN in) {sbar})) (. .)))")


def topic_doc(t):
    dom = DOMS[t]
    junk = junk_of(t)
    th = themes_of(t)
    nov = novelties_of(t)
    doc_id = f"TOP{t:02d}"

    claims = []
    parses = []

    def add(num, text, ptb):
        claims.append({"num": num, "text": text})
        parses.append({"doc_id": doc_id, "claim_num": num, "ptb": ptb})

    # apparatus tree: claims 1-3 (junk), extended by 7-9 (themes, novelty)
    add(1, comp_claim_text(dom, "apparatus", "processing", junk[0:24], "unit"),
        comp_claim_ptb(dom, "apparatus", "processing", junk[0:24], "unit"))

    vp2 = (f"(VP (VBP are) (VP (VBN configured) (PP (IN for) "
           f"(NP (NN {dom}) (NN handling)))))")
    add(2, dep_claim_text(dom, "apparatus", "processing", 1, junk[24:30],
                          "modules", "are configured for", f"{dom} handling"),
        dep_claim_ptb(dom, "apparatus", "processing", 1, junk[24:30],
                      "modules", vp2))

    vp3 = (f"(VP (VBP are) (VP (VBN fitted) (PP (IN for) "
           f"(NP (NN {dom}) (NN monitoring)))))")
    add(3, dep_claim_text(dom, "apparatus", "processing", 2, junk[30:36],
                          "sensors", "are fitted for", f"{dom} monitoring"),
        dep_claim_ptb(dom, "apparatus", "processing", 2, junk[30:36],
                      "sensors", vp3))

    # method tree: claims 4-6 (junk only)
    add(4, comp_claim_text(dom, "method", "treatment", junk[36:60], "stage"),
        comp_claim_ptb(dom, "method", "treatment", junk[36:60], "stage"))

    vp5 = (f"(VP (VBP are) (VP (VBN sequenced) (PP (IN for) "
           f"(NP (NN {dom}) (NN throughput)))))")
    add(5, dep_claim_text(dom, "method", "treatment", 4, junk[60:66],
                          "phases", "are sequenced for", f"{dom} throughput"),
        dep_claim_ptb(dom, "method", "treatment", 4, junk[60:66],
                      "phases", vp5))

    vp6 = (f"(VP (VBP are) (VP (VBN staged) (PP (IN for) "
           f"(NP (NN {dom}) (NN batching)))))")
    add(6, dep_claim_text(dom, "method", "treatment", 5, junk[66:72],
                          "buffers", "are staged for", f"{dom} batching"),
        dep_claim_ptb(dom, "method", "treatment", 5, junk[66:72],
                      "buffers", vp6))

    # deep apparatus claims: themes in the clause subject, novelty in the
    # deepest chunk
    vp7 = (f"(VP (VBZ is) (VP (VBN mounted) (PP (IN for) "
           f"(NP (NN {dom}) (NN alignment)))))")
    text7 = (f"The {dom} processing apparatus according to claim 3, "
             f"characterized in that the {th[0]} {th[1]} {th[2]} {th[3]} "
             f"carrier is mounted for {dom} alignment.")
    subj7 = (f"(NP (NP (DT The) (NN {dom}) (NN processing) (NN apparatus)) "
             f"(PP (VBG according) (PP (TO to) (NP (NN claim) (CD 3)))))")
    clause7 = f"(NP (DT the) {np_leaves(th[0:4])} (NN carrier))"
    ptb7 = (f"(ROOT (NP {subj7} (, ,) (VP (VBN characterized) (PP (IN in) "
            f"(SBAR (IN that) (S {clause7} {vp7})))) (. .)))")
    add(7, text7, ptb7)

    text8 = (f"The {dom} processing apparatus according to claim 7, "
             f"characterized in that the {th[4]} {th[5]} {th[6]} {th[7]} "
             f"module comprises a {nov[0]} {nov[1]} matrix.")
    vp8 = (f"(VP (VBZ comprises) (NP (DT a) (NN {nov[0]}) (NN {nov[1]}) "
           f"(NN matrix)))")
    subj8 = (f"(NP (NP (DT The) (NN {dom}) (NN processing) (NN apparatus)) "
             f"(PP (VBG according) (PP (TO to) (NP (NN claim) (CD 7)))))")
    clause8 = f"(NP (DT the) {np_leaves(th[4:8])} (NN module))"
    ptb8 = (f"(ROOT (NP {subj8} (, ,) (VP (VBN characterized) (PP (IN in) "
            f"(SBAR (IN that) (S {clause8} {vp8})))) (. .)))")
    add(8, text8, ptb8)

    text9 = (f"The {dom} processing apparatus according to claims 7 or 8, "
             f"characterized in that the {th[8]} {th[9]} {th[10]} {th[11]} "
             f"lattice contains a {nov[2]} bonded interface.")
    vp9 = (f"(VP (VBZ contains) (NP (DT a) (NN {nov[2]}) (VBN bonded) "
           f"(NN interface)))")
    subj9 = (f"(NP (NP (DT The) (NN {dom}) (NN processing) (NN apparatus)) "
             f"(PP (VBG according) (PP (TO to) (NP (NNS claims) (CD 7) "
             f"(CC or) (CD 8)))))")
    clause9 = f"(NP (DT the) {np_leaves(th[8:12])} (NN lattice))"
    ptb9 = (f"(ROOT (NP {subj9} (, ,) (VP (VBN characterized) (PP (IN in) "
            f"(SBAR (IN that) (S {clause9} {vp9})))) (. .)))")
    add(9, text9, ptb9)

    doc = {"doc_id": doc_id, "family_id": f"FAMT{t:02d}", "language": "en",
           "claims": claims}
    return doc, parses


def relevant_docs(t):
    dom = DOMS[t]
    th = themes_of(t)
    nov = novelties_of(t)
    docs = []

    a1 = {
        "doc_id": f"REL{t:02d}A1", "family_id": f"FAMA{t:02d}",
        "language": "en",
        "claims": [
            {"num": 1, "text": f"A {dom} processing apparatus comprising a "
                               f"{nov[0]} {nov[1]} matrix carrier."},
            {"num": 2, "text": f"The apparatus of claim 1, wherein the "
                               f"{th[0]} {th[1]} module seats a {nov[2]} "
                               f"bonded interface."},
            {"num": 3, "text": f"The apparatus of claim 2, wherein the "
                               f"{th[4]} {th[8]} lattice encloses the "
                               f"{nov[0]} {nov[1]} matrix."},
        ]}
    a2 = {
        "doc_id": f"REL{t:02d}A2", "family_id": f"FAMA{t:02d}",
        "language": "en",
        "claims": [
            {"num": 1, "text": f"A {dom} treatment method forming a "
                               f"{nov[0]} {nov[1]} matrix on a {th[2]} "
                               f"{th[5]} carrier."},
            {"num": 2, "text": f"The method of claim 1, wherein a {nov[2]} "
                               f"bonded interface joins the {th[9]} "
                               f"lattice."},
        ]}
    b1 = {
        "doc_id": f"REL{t:02d}B1", "family_id": f"FAMB{t:02d}",
        "language": "en",
        "claims": [
            {"num": 1, "text": f"A {dom} processing apparatus having a "
                               f"{th[3]} {th[6]} {th[10]} module."},
            {"num": 2, "text": f"The apparatus of claim 1, wherein the "
                               f"module comprises a {nov[0]} {nov[1]} matrix "
                               f"and a {nov[2]} bonded interface on a "
                               f"{th[7]} {th[11]} lattice."},
        ]}
    docs.extend([a1, a2, b1])
    return docs


def distractor_docs():
    # junk term g lives in distractors g%15 and (g+7)%15; theme copies go
    # to (g+3)%15 and (g+11)%15.
    n = 15
    junk_by_d = [[] for _ in range(n)]
    for g, term in enumerate(JUNK):
        junk_by_d[g % n].append(term)
        junk_by_d[(g + 7) % n].append(term)
    themes_by_d = [[] for _ in range(n)]
    all_themes = [th for t in range(10) for th in themes_of(t)]
    for g, term in enumerate(all_themes):
        themes_by_d[(g + 3) % n].append(term)
        themes_by_d[(g + 11) % n].append(term)

    docs = []
    for d in range(n):
        dom_a = DOMS[d % 10]
        dom_b = DOMS[(d + 3) % 10]
        junk = junk_by_d[d]
        themes = themes_by_d[d]
        claims = []
        num = 1
        # component listings soak up the junk vocabulary
        for i in range(0, len(junk), 16):
            chunk = junk[i:i + 16]
            parts = [f"a {' '.join(chunk[j:j + 4])} unit"
                     for j in range(0, len(chunk), 4)]
            listing = ", ".join(parts[:-1]) + " and " + parts[-1] \
                if len(parts) > 1 else parts[0]
            lead = (f"A {dom_a} processing apparatus comprising {listing}."
                    if num == 1 else
                    f"The {dom_b} treatment method of claim {num - 1} "
                    f"employing {listing}.")
            claims.append({"num": num, "text": lead})
            num += 1
        mentions = " ".join(themes)
        claims.append({"num": num,
                       "text": f"The apparatus of claim 1 referencing "
                               f"{mentions} grades."})
        docs.append({"doc_id": f"DIS{d:02d}", "family_id": f"FAMD{d:02d}",
                     "language": "en", "claims": claims})

    docs.append({"doc_id": "DIS_DE", "family_id": "FAMD_DE", "language": "de",
                 "claims": [{"num": 1,
                             "text": "Eine Vorrichtung mit einem Ventil."}]})
    return docs


def write_synthetic():
    out_dir = os.path.join(OUT, "synthetic")
    os.makedirs(out_dir, exist_ok=True)
    corpus = []
    parses = []
    qrels = []
    for t in range(10):
        doc, doc_parses = topic_doc(t)
        corpus.append(doc)
        parses.extend(doc_parses)
        corpus.extend(relevant_docs(t))
        qrels.append((doc["doc_id"], f"FAMA{t:02d}"))
        qrels.append((doc["doc_id"], f"FAMB{t:02d}"))
    corpus.extend(distractor_docs())

    with open(os.path.join(out_dir, "corpus.jsonl"), "w") as f:
        for doc in corpus:
            f.write(json.dumps(doc) + "\n")
    with open(os.path.join(out_dir, "parses.jsonl"), "w") as f:
        for rec in parses:
            f.write(json.dumps(rec) + "\n")
    with open(os.path.join(out_dir, "qrels.tsv"), "w") as f:
        f.write("# topic_doc_id<TAB>relevant_family_id\n")
        for topic, family in qrels:
            f.write(f"{topic}\t{family}\n")
    print(f"synthetic: {len(corpus)} docs, {len(parses)} parses, "
          f"{len(qrels)} qrels")


CLAIM37_TEXT = (
    "Method according to one or more of the preceding claims 25 to 36, "
    "characterized in that initial iteration steps for determining "
    "compensation dipoles by means of quadratic or linear programming can "
    "provide in combination a modification for each subsequent iteration "
    "step consisting in a reduction of constraints such that the partial "
    "solution converges progressively towards a solution that is considered "
    "an optimum one.")

CLAIM37_PTB = (
    "(ROOT (NP (NP (NN Method)) (PP (VBG according) (PP (TO to) (NP (NP (QP "
    "(CD one) (CC or) (JJR more))) (PP (IN of) (NP (DT the) (JJ preceding) "
    "(NNS claims) (CD 25) (TO to) (CD 36)))))) (, ,) (VP (VBN characterized) "
    "(PP (IN in) (SBAR (IN that) (S (NP (NP (JJ initial) (NN iteration) (NNS "
    "steps)) (PP (IN for) (S (VP (VBG determining) (NP (NN compensation) (NNS "
    "dipoles)) (PP (IN by) (NP (NP (NNS means)) (PP (IN of) (NP (JJ "
    "quadratic) (CC or) (JJ linear) (NN programming))))))))) (VP (MD can) (VP "
    "(VB provide) (PP (IN in) (NP (NN combination))) (NP (NP (DT a) (NN "
    "modification)) (PP (IN for) (NP (DT each) (JJ subsequent) (NN iteration) "
    "(NN step))) (VP (VBG consisting) (PP (IN in) (NP (NP (DT a) (NN "
    "reduction)) (PP (IN of) (NP (NNS constraints))))) (SBAR (IN such) (IN "
    "that) (S (NP (DT the) (JJ partial) (NN solution)) (VP (VBZ converges) "
    "(ADVP (RB progressively)) (PP (IN towards) (NP (NP (DT a) (NN solution)) "
    "(SBAR (WHNP (WDT that)) (S (VP (VBZ is) (VP (VBN considered) (NP (DT an) "
    "(JJ optimum) (NN one)))))))))))))))))))) (. .))")


def write_ep_fixture():
    out_dir = os.path.join(OUT, "ep1748300")
    os.makedirs(out_dir, exist_ok=True)
    claims = []
    parses = []
    for k in range(25, 37):
        claims.append({"num": k,
                       "text": f"A compensation method variant {k - 24}."})
        parses.append({
            "doc_id": "EP-1748300-A1", "claim_num": k,
            "ptb": f"(ROOT (NP (DT A) (NN compensation) (NN method) "
                   f"(NN variant) (CD {k - 24}) (. .)))"})
    claims.append({"num": 37, "text": CLAIM37_TEXT})
    parses.append({"doc_id": "EP-1748300-A1", "claim_num": 37,
                   "ptb": CLAIM37_PTB})
    doc = {"doc_id": "EP-1748300-A1", "family_id": "EP-1748300",
           "language": "en", "claims": claims}
    with open(os.path.join(out_dir, "corpus.jsonl"), "w") as f:
        f.write(json.dumps(doc) + "\n")
    with open(os.path.join(out_dir, "parses.jsonl"), "w") as f:
        for rec in parses:
            f.write(json.dumps(rec) + "\n")
    print("ep1748300: 1 doc, 13 parses")


if __name__ == "__main__":
    write_synthetic()
    write_ep_fixture()
