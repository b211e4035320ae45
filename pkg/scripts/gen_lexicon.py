"""Generate the bundled keyword lexicon (src/motifjournal/data/lexicon.json).

Keywords are curated morphological families plus common idioms. Weights are
tiered by how strongly a keyword signals its label. A keyword may carry
several labels; the SHARED table below holds those cross-label cases.

Run from the repo root:  python scripts/gen_lexicon.py
"""

from __future__ import annotations

import json
from pathlib import Path

# keyword tiers per label: weight -> keywords
BY_LABEL: dict[str, dict[float, list[str]]] = {
    # ------------------------------------------------------------- topics
    "exercise": {
        0.85: ["gym", "workout", "workouts", "work out", "worked out",
               "working out", "exercise", "exercised", "exercising",
               "weightlifting", "crossfit", "treadmill", "deadlift"],
        0.7: ["jog", "jogging", "jogged", "cardio", "situps", "sit ups",
              "pushups", "push ups", "squats", "lunges", "crunches", "plank",
              "yoga", "pilates", "marathon", "sprints", "elliptical",
              "spin class", "rowing machine", "reps", "lifting weights",
              "personal trainer", "fitness"],
        0.55: ["run", "running", "ran", "swim", "swimming", "swam", "laps",
               "cycling", "cycled", "bike ride", "biking", "stretching",
               "stretched", "weights", "trainer", "sprint", "5k", "10k"],
        0.4: ["hike", "hiking", "hiked", "sore", "sweat", "sweaty", "lifted"],
    },
    "family": {
        0.85: ["family", "my mom", "my dad", "my mother", "my father",
               "my brother", "my sister", "my son", "my daughter",
               "family dinner", "family reunion"],
        0.7: ["mom", "dad", "mother", "father", "parents", "brother",
              "sister", "siblings", "sibling", "son", "daughter", "kids",
              "children", "grandma", "grandmother", "grandpa", "grandfather",
              "grandparents", "aunt", "uncle", "cousin", "cousins", "nephew",
              "niece", "relatives", "stepmom", "stepdad", "in laws"],
        0.55: ["toddler", "newborn", "baby", "twins", "household", "folks",
               "babysitting", "babysat", "daughters", "sons"],
    },
    "food": {
        0.85: ["food", "breakfast", "lunch", "dinner", "brunch", "recipe",
               "recipes", "restaurant", "delicious", "cooking", "cooked"],
        0.7: ["eat", "eating", "ate", "meal", "meals", "snack", "snacks",
              "cook", "baked", "baking", "bake", "kitchen", "pizza", "pasta",
              "sushi", "burger", "burgers", "sandwich", "salad", "soup",
              "steak", "tacos", "noodles", "dessert", "cake", "cookies",
              "ice cream", "groceries", "grocery", "takeout", "take out",
              "leftovers", "tasty", "yummy", "cuisine", "buffet", "barbecue",
              "bbq", "grilled", "grilling", "feast"],
        0.55: ["coffee", "tea", "chicken", "rice", "cafe", "appetite",
               "hungry", "dish", "flavor", "seasoning", "oven"],
    },
    "friends": {
        0.85: ["friend", "friends", "best friend", "friendship", "bestie",
               "my buddy", "girls night", "guys night"],
        0.7: ["buddy", "buddies", "pal", "pals", "roommate", "roommates",
              "hang out", "hung out", "hangout", "hanging out", "catch up",
              "caught up", "catching up", "get together", "meetup",
              "reunion", "gathering", "classmate", "classmates"],
        0.55: ["neighbor", "neighbors", "party", "parties", "chatted",
               "chatting", "gossip", "texted", "texting", "conversation",
               "wavelength", "squad", "crew", "mates", "acquaintance",
               "companionship"],
    },
    "god": {
        0.85: ["god", "pray", "prayer", "prayers", "prayed", "praying",
               "church", "worship", "bible", "sermon", "bible study",
               "sunday service"],
        0.7: ["temple", "mosque", "synagogue", "faith", "scripture", "quran",
              "torah", "pastor", "priest", "rabbi", "imam", "blessing",
              "bless", "spiritual", "spirituality", "religion", "religious",
              "devotion", "devotional", "congregation", "chapel", "hymn",
              "hymns", "gospel", "psalm", "holy", "lord", "jesus", "christ",
              "allah", "buddha", "divine", "amen", "sabbath", "mass"],
        0.55: ["worshipped", "faithful", "verse", "preacher", "ministry"],
    },
    "health": {
        0.85: ["health", "doctor", "doctors", "dentist", "hospital",
               "doctor appointment", "checkup", "check up", "diagnosis",
               "diagnosed", "prescription", "medication"],
        0.7: ["healthy", "unhealthy", "clinic", "nurse", "medicine", "meds",
              "pills", "pharmacy", "sick", "sickness", "ill", "illness",
              "flu", "fever", "cough", "coughing", "headache", "migraine",
              "stomachache", "allergies", "allergy", "asthma", "therapy",
              "therapist", "physical therapy", "blood pressure",
              "cholesterol", "vitamins", "injury", "injured", "sprained",
              "surgery", "symptoms", "virus", "infection", "vaccine",
              "vaccination", "wellness"],
        0.55: ["diet", "dieting", "recovery", "recovering", "ache", "aching",
               "nausea", "dizzy", "sore throat", "appointment"],
    },
    "love": {
        0.85: ["love", "romance", "romantic", "boyfriend", "girlfriend",
               "fiance", "fiancee", "date night", "anniversary", "valentine",
               "valentines", "soulmate", "honeymoon"],
        0.7: ["partner", "crush", "dating", "kiss", "kissed", "kissing",
              "cuddle", "cuddled", "cuddling", "sweetheart", "darling",
              "affection", "affectionate", "adore", "adored", "relationship",
              "wedding", "engaged", "engagement", "proposal", "proposed",
              "marriage", "married", "smitten", "intimate", "intimacy"],
        0.55: ["date", "dated", "bouquet", "beloved", "heartfelt", "dear"],
    },
    "recreation": {
        0.85: ["hobby", "hobbies", "video games", "videogame", "board game",
               "amusement park", "vacation", "camping", "binge watched",
               "book club"],
        0.7: ["game", "games", "gaming", "movie", "movies", "film", "cinema",
              "theater", "concert", "festival", "museum", "picnic", "beach",
              "trip", "travel", "traveling", "adventure", "fishing",
              "kayaking", "surfing", "skiing", "snowboarding", "bowling",
              "golf", "knitting", "photography", "karaoke", "puzzle",
              "puzzles", "chess", "netflix", "television", "reading",
              "novel", "painting", "sketching", "zoo", "aquarium"],
        0.55: ["park", "played", "play", "playing", "tv", "show", "shows",
               "series", "episode", "cards", "drawing", "guitar", "piano",
               "singing", "dancing", "shopping", "mall", "campfire",
               "vacationing", "sightseeing"],
    },
    "school": {
        0.85: ["school", "homework", "exam", "exams", "midterm", "midterms",
               "professor", "semester", "campus", "thesis", "dissertation",
               "gpa", "syllabus", "lecture", "lectures"],
        0.7: ["class", "classes", "classroom", "teacher", "teachers",
              "student", "students", "assignment", "assignments", "essay",
              "quiz", "quizzes", "study", "studying", "studied", "college",
              "university", "degree", "tuition", "scholarship", "grades",
              "graduation", "textbook", "textbooks", "course", "courses",
              "curriculum", "enrolled", "finals"],
        0.55: ["grade", "major", "notes", "lab report", "kindergarten",
               "preschool", "graduate", "test", "tests"],
    },
    "sleep": {
        0.85: ["sleep", "sleeping", "slept", "asleep", "insomnia",
               "sleepless", "overslept", "nap", "napped", "napping",
               "bedtime", "jet lag"],
        0.7: ["tired", "exhausted", "fatigue", "fatigued", "drowsy",
              "sleepy", "woke up", "wake up", "waking up", "awake", "dream",
              "dreams", "dreamt", "dreamed", "nightmare", "nightmares",
              "snoring", "snore", "melatonin", "all night"],
        0.55: ["bed", "rest", "rested", "resting", "pillow", "blanket",
               "mattress", "alarm clock", "dozed", "dozing", "up late"],
    },
    "work": {
        0.85: ["work", "job", "jobs", "office", "workplace", "boss",
               "manager", "supervisor", "coworker", "coworkers", "deadline",
               "deadlines", "paycheck", "salary", "promotion", "overtime",
               "team meeting", "workload"],
        0.7: ["working", "worked", "colleague", "colleagues", "meeting",
              "meetings", "project", "projects", "client", "clients",
              "customer", "customers", "shift", "shifts", "wages", "hired",
              "hiring", "fired", "layoff", "laid off", "resignation",
              "resigned", "interview", "interviews", "interviewed",
              "career", "profession", "presentation", "spreadsheet",
              "spreadsheets", "conference", "commute", "commuting",
              "freelance", "staff", "wfh"],
        0.55: ["business", "email", "emails", "task", "tasks", "quit",
               "report", "desk", "clock in", "clocked in", "on call"],
    },
    # ----------------------------------------------------------- emotions
    "afraid": {
        0.85: ["afraid", "scared", "terrified", "terrifying", "petrified",
               "frightened", "frightening", "horrified", "fearful"],
        0.7: ["fear", "scary", "terror", "panic", "panicked", "panicking",
              "panicky", "dread", "dreading", "dreaded", "horror", "spooked",
              "creepy", "creeped out", "intimidated", "intimidating",
              "menacing", "threatened", "threatening", "phobia"],
        0.55: ["unsafe", "danger", "dangerous", "jumpy", "shaken",
               "trembling", "trembled", "petrifying", "eerie", "chilling"],
    },
    "angry": {
        0.85: ["angry", "furious", "enraged", "livid", "irate", "fuming",
               "outraged", "infuriated", "infuriating", "pissed off"],
        0.7: ["anger", "mad", "fury", "rage", "raging", "outrage", "pissed",
              "seething", "heated", "hostile", "hostility", "temper",
              "tantrum", "wrath", "indignant", "snapped"],
        0.55: ["resent", "resentment", "bitterness", "yelled", "yelling",
               "shouted", "shouting", "slammed", "grudging", "ticked off"],
    },
    "anxious": {
        0.85: ["anxious", "anxiety", "nervous", "worried", "stressed",
               "stressful", "on edge", "panic attack", "overwhelmed"],
        0.7: ["nerves", "worry", "worrying", "worries", "stress",
              "stressing", "tense", "tension", "uneasy", "unease",
              "apprehensive", "apprehension", "jittery", "jitters", "edgy",
              "overthinking", "overthought", "fretting", "fretted", "antsy",
              "freaking out", "racing thoughts"],
        0.55: ["concerned", "concern", "worrisome", "butterflies", "fret",
               "uptight", "frazzled", "wound up"],
    },
    "ashamed": {
        0.85: ["ashamed", "shame", "humiliated", "humiliating",
               "humiliation", "mortified", "mortifying", "embarrassed",
               "embarrassing", "embarrassment"],
        0.7: ["shameful", "guilt", "guilty", "regret", "regretful",
              "regretted", "regrets", "remorse", "remorseful", "sheepish",
              "disgraced", "disgrace", "blushed", "blushing", "my fault"],
        0.55: ["apologize", "apologized", "apology", "sorry", "foolish",
               "red faced", "dishonor", "cringeworthy"],
    },
    "awkward": {
        0.85: ["awkward", "awkwardness", "awkwardly", "tongue tied",
               "faux pas", "awkward silence"],
        0.7: ["uncomfortable", "discomfort", "clumsy", "clumsily", "fumbled",
              "fumbling", "stammered", "stammering", "stuttered",
              "stuttering", "bumbling", "blundered", "blunder", "cringey",
              "gauche", "graceless"],
        0.55: ["weird", "weirdly", "odd", "oddly", "stumbled", "inept",
               "ungainly", "self conscious", "small talk", "mishap"],
    },
    "bored": {
        0.85: ["bored", "boring", "boredom", "tedious", "tedium",
               "monotonous", "monotony", "humdrum", "uneventful"],
        0.7: ["dull", "dullness", "unexciting", "uninteresting",
              "uninspired", "uninspiring", "bland", "dreary", "drab",
              "mundane", "repetitive", "repetitious", "listless",
              "lackluster", "ho hum", "same old"],
        0.55: ["idle", "idly", "yawned", "yawning", "dragging", "dragged",
               "slow day", "stale", "meh", "blah", "nothing happened"],
    },
    "calm": {
        0.85: ["calm", "calming", "calmly", "peaceful", "serene", "serenity",
               "tranquil", "tranquility", "relaxed", "relaxing", "at ease"],
        0.7: ["peace", "peacefully", "relax", "relaxation", "mellow",
              "soothing", "soothed", "soothe", "zen", "meditative",
              "meditated", "unwind", "unwinding", "unwound", "composed",
              "composure", "restful", "placid", "chilled out", "laid back",
              "deep breath"],
        0.55: ["quiet", "quietly", "stillness", "easygoing", "gentle",
               "untroubled", "breezy", "grounded", "centered", "chill",
               "balanced", "cozy"],
    },
    "confused": {
        0.85: ["confused", "confusing", "confusion", "puzzled", "perplexed",
               "baffled", "bewildered", "befuddled", "mystified",
               "flummoxed", "stumped"],
        0.7: ["puzzling", "perplexing", "baffling", "bewildering",
              "mystifying", "disoriented", "disorienting", "muddled",
              "dumbfounded", "no sense", "mixed up", "head scratching",
              "second guessing"],
        0.55: ["unclear", "unsure", "uncertain", "uncertainty", "ambiguous",
               "ambiguity", "muddle", "torn", "conflicted", "indecisive"],
    },
    "disgusted": {
        0.85: ["disgusted", "disgusting", "disgust", "revolting", "revolted",
               "repulsive", "repulsed", "vile", "grossed out", "sickening"],
        0.7: ["gross", "nasty", "repugnant", "foul", "sickened",
              "nauseating", "icky", "yucky", "yuck", "gag", "gagged",
              "gagging", "putrid", "rancid", "appalled", "appalling",
              "repelled", "stomach turning", "distasteful"],
        0.55: ["filthy", "filth", "grimy", "slimy", "stench", "stink",
               "stinky", "stinks", "reeked", "reeking", "squalid",
               "unappetizing", "eww"],
    },
    "excited": {
        0.85: ["excited", "exciting", "excitement", "thrilled", "thrilling",
               "exhilarated", "exhilarating", "stoked", "psyched", "pumped",
               "hyped", "looking forward"],
        0.7: ["thrill", "eager", "eagerly", "eagerness", "anticipation",
              "anticipating", "buzzing", "giddy", "adrenaline", "exuberant",
              "energized", "energetic", "enthusiasm", "enthusiastic",
              "enthusiastically", "amped", "jazzed", "raring"],
        0.55: ["buzz", "electric", "counting down", "hyping", "revved up",
               "big news", "stirred up"],
    },
    "frustrated": {
        0.85: ["frustrated", "frustrating", "frustration", "exasperated",
               "exasperating", "exasperation", "fed up", "maddening"],
        0.7: ["annoyed", "annoying", "annoyance", "irritated", "irritating",
              "irritation", "aggravating", "thwarted", "hindered", "vexed",
              "vexing", "grating", "hassle", "hassled", "setback",
              "setbacks", "dead end", "not working", "stuck"],
        0.55: ["stalled", "blocked", "struggling", "struggled", "struggle",
               "inconvenient", "inconvenience", "tiresome", "bothered",
               "bothersome", "ugh", "argh", "futile", "pointless", "glitch",
               "glitchy", "malfunction", "malfunctioning", "broken",
               "wasted", "problems"],
    },
    "happy": {
        0.85: ["happy", "happiness", "happily", "joy", "joyful", "joyous",
               "joyfully", "delighted", "delightful", "overjoyed",
               "cheerful", "blissful", "wonderful", "good mood", "best day"],
        0.7: ["glad", "gladly", "gladness", "cheery", "cheer", "delight",
              "amazing", "fantastic", "terrific", "awesome", "lovely",
              "bliss", "merry", "jolly", "upbeat", "beaming", "grinning",
              "grin", "smiled", "smiling", "smile", "smiles", "laughed",
              "laughing", "laughter", "laughs", "giggled", "giggling",
              "giggle", "chuckled", "euphoric", "euphoria", "radiant",
              "enjoyed", "enjoying", "enjoyable", "enjoyment"],
        0.55: ["wonderfully", "great", "glee", "gleeful", "sunny", "bright",
               "heartwarming", "uplifting", "uplifted"],
    },
    "jealous": {
        0.85: ["jealous", "jealousy", "envy", "envious", "envied",
               "green with envy"],
        0.7: ["covet", "coveted", "coveting", "covetous", "begrudge",
              "begrudgingly", "grudge", "enviable", "possessive",
              "possessiveness", "enviously"],
        0.55: ["rivalry", "rival", "favoritism", "territorial", "left out",
               "third wheel", "comparing myself", "over me", "unfair",
               "insecure", "resentful", "bitter"],
    },
    "nostalgic": {
        0.85: ["nostalgic", "nostalgia", "reminisce", "reminisced",
               "reminiscing", "reminiscent", "sentimental", "wistful",
               "bittersweet", "homesick", "old times", "remember when"],
        0.7: ["memories", "memory", "remembered", "remembering", "yearning",
              "yearned", "longing", "longed", "wistfully", "throwback",
              "flashback", "childhood", "keepsake", "memento", "mementos",
              "scrapbook", "yearbook", "heirloom", "good old", "old photos",
              "photo album", "growing up"],
        0.55: ["missed", "miss", "retro", "vintage", "the past", "used to",
               "sentimentality", "old friend"],
    },
    "proud": {
        0.85: ["proud", "pride", "proudly", "accomplished", "accomplishment",
               "accomplishments", "triumph", "triumphant", "personal best",
               "nailed it", "first place"],
        0.7: ["achieved", "achievement", "achievements", "victorious",
              "victory", "earned", "milestone", "milestones", "mastered",
              "mastery", "succeeded", "successful", "successfully",
              "honored", "award", "awarded", "awards", "medal", "trophy",
              "recognition", "recognized", "praised", "won", "aced",
              "new record"],
        0.55: ["achieve", "honor", "praise", "compliment", "complimented",
               "compliments", "success", "winning", "confident", "impressed",
               "self esteem", "did it"],
    },
    "sad": {
        0.85: ["sad", "sadness", "sadly", "unhappy", "depressed",
               "depressing", "depression", "heartbroken", "heartbreak",
               "heartbreaking", "devastated", "devastating", "miserable",
               "grief", "grieving", "mourning", "passed away"],
        0.7: ["unhappiness", "gloomy", "gloom", "misery", "sorrow",
              "sorrowful", "grieved", "mourned", "mourn", "cried", "crying",
              "cry", "tears", "tearful", "teary", "wept", "weeping",
              "sobbed", "sobbing", "sob", "lonely", "loneliness",
              "melancholy", "melancholic", "despair", "despairing",
              "hopeless", "hopelessness", "dejected", "downcast",
              "disheartened", "disheartening", "heavy hearted", "funeral",
              "feeling down", "disappointed", "disappointing",
              "disappointment", "tragic", "tragedy"],
        0.55: ["dismal", "isolated", "loss", "died", "death", "dying",
               "hurting", "hurt", "crushed", "alone", "blue mood",
               "let down", "lost"],
    },
    "satisfied": {
        0.85: ["satisfied", "satisfying", "satisfaction", "content",
               "contented", "contentment", "fulfilled", "fulfilling",
               "fulfillment", "gratified", "gratifying", "worth it"],
        0.7: ["pleased", "pleasant", "pleasantly", "worthwhile", "rewarding",
              "rewarded", "productive", "grateful", "gratitude", "thankful",
              "thankfulness", "appreciative", "appreciated", "paid off",
              "well spent", "crossed off", "checked off"],
        0.55: ["productivity", "appreciate", "gratification", "comfortable",
               "snug", "completed", "finished", "wrapped up", "smug",
               "at last", "enough done"],
    },
    "surprised": {
        0.85: ["surprised", "surprising", "surprise", "surprises", "shocked",
               "shocking", "astonished", "astonishing", "astonishment",
               "astounded", "astounding", "stunned", "flabbergasted",
               "caught off", "off guard"],
        0.7: ["shock", "amazed", "amazement", "unexpected", "unexpectedly",
              "unbelievable", "speechless", "jaw dropped", "bombshell",
              "gasped", "gasp", "blown away", "mindblowing", "mindblown",
              "of nowhere", "plot twist"],
        0.55: ["sudden", "suddenly", "whoa", "wow", "revelation",
               "turned out", "no way", "startling"],
    },
}

# keywords that legitimately signal several labels
SHARED: dict[str, list[tuple[str, float]]] = {
    "wife": [("family", 0.6), ("love", 0.35)],
    "husband": [("family", 0.6), ("love", 0.35)],
    "spouse": [("family", 0.6), ("love", 0.35)],
    "loved": [("love", 0.45), ("happy", 0.3)],
    "loving": [("love", 0.5), ("happy", 0.25)],
    "hug": [("love", 0.35), ("friends", 0.25)],
    "hugged": [("love", 0.35), ("friends", 0.25)],
    "meditation": [("calm", 0.5), ("god", 0.35)],
    "tennis": [("exercise", 0.45), ("recreation", 0.4)],
    "basketball": [("exercise", 0.45), ("recreation", 0.4)],
    "soccer": [("exercise", 0.45), ("recreation", 0.4)],
    "football": [("exercise", 0.4), ("recreation", 0.45)],
    "baseball": [("exercise", 0.4), ("recreation", 0.45)],
    "volleyball": [("exercise", 0.45), ("recreation", 0.4)],
    "fun": [("recreation", 0.5), ("happy", 0.35)],
    "graduated": [("school", 0.6), ("proud", 0.4)],
    "promoted": [("work", 0.6), ("proud", 0.45)],
    "restless": [("anxious", 0.5), ("sleep", 0.3)],
    "nightmare": [("sleep", 0.6), ("afraid", 0.35)],
    "nauseous": [("health", 0.45), ("disgusted", 0.4)],
    "nauseated": [("health", 0.45), ("disgusted", 0.4)],
    "aggravated": [("frustrated", 0.45), ("angry", 0.35)],
    "startled": [("surprised", 0.5), ("afraid", 0.3)],
    "elated": [("excited", 0.4), ("happy", 0.45)],
    "ecstatic": [("excited", 0.5), ("happy", 0.4)],
    "cringe": [("awkward", 0.45), ("ashamed", 0.25)],
    "cringed": [("awkward", 0.45), ("ashamed", 0.25)],
    "flustered": [("awkward", 0.4), ("anxious", 0.3)],
    "blessed": [("god", 0.4), ("satisfied", 0.3), ("happy", 0.25)],
    "pain": [("health", 0.45), ("sad", 0.25)],
    "painful": [("health", 0.4), ("sad", 0.3)],
    "messed up": [("ashamed", 0.35), ("frustrated", 0.3)],
    "screamed": [("angry", 0.4), ("afraid", 0.3)],
    "strange": [("confused", 0.3), ("awkward", 0.3)],
    "sleepover": [("friends", 0.5), ("sleep", 0.3)],
    "coach": [("exercise", 0.4), ("work", 0.3)],
    "dance class": [("exercise", 0.4), ("recreation", 0.45)],
    "swimming pool": [("exercise", 0.35), ("recreation", 0.45)],
    "road trip": [("recreation", 0.6), ("friends", 0.25)],
    "game night": [("recreation", 0.55), ("friends", 0.4)],
    "happy hour": [("friends", 0.5), ("work", 0.25)],
    "potluck": [("food", 0.55), ("friends", 0.4)],
    "bedridden": [("health", 0.55), ("sleep", 0.3)],
}


def build() -> dict:
    merged: dict[str, list[tuple[str, float]]] = {}
    for label, tiers in BY_LABEL.items():
        for weight, keywords in tiers.items():
            for keyword in keywords:
                merged.setdefault(keyword, []).append((label, weight))
    for keyword, labels in SHARED.items():
        merged.setdefault(keyword, []).extend(labels)

    entries = [
        {"keyword": kw, "labels": [[label, w] for label, w in sorted(labels)]}
        for kw, labels in sorted(merged.items())
    ]
    return {"version": 1, "entries": entries}


def main() -> None:
    out = Path(__file__).resolve().parent.parent / "src" / "motifjournal" / "data"
    out.mkdir(parents=True, exist_ok=True)
    data = build()
    with open(out / "lexicon.json", "w", encoding="utf-8") as f:
        json.dump(data, f, indent=1)
        f.write("\n")
    n_labels = {}
    for e in data["entries"]:
        for label, _ in e["labels"]:
            n_labels[label] = n_labels.get(label, 0) + 1
    print(f"{len(data['entries'])} keywords")
    for label in sorted(n_labels):
        print(f"  {label}: {n_labels[label]}")


if __name__ == "__main__":
    main()
