#!/usr/bin/env python3
"""Regenerates core/data/langid_profiles.json and core/data/english_lexicon.txt.

The language-id component works from character-trigram frequency profiles
plus an English word list. Both are built here from seed material embedded
in this script so the toolkit stays self-contained; rerunning the script
reproduces the committed data files byte for byte.
"""

import json
import math
import os
import unicodedata

HERE = os.path.dirname(os.path.abspath(__file__))
DATA_DIR = os.path.join(HERE, os.pardir, "core", "data")

TOP_TRIGRAMS = 3000

# ---------------------------------------------------------------------------
# Seed text. A few dozen sentences per language is enough for 4-token
# windows: discrimination rests on function-word trigrams, which dominate
# any running text sample.
# ---------------------------------------------------------------------------

SEED = {}

SEED["en"] = """
the quick brown fox jumps over the lazy dog while the children watch from the garden
this function returns the number of rows in the table after the filter has been applied
we should always check whether the file exists before trying to open it for reading
the weather was cold and the streets were empty when she walked home from the station
please make sure that all the tests pass before you push your changes to the server
he wanted to know why the meeting had been moved to the following week without notice
the value of the counter is increased every time a new request arrives at the gateway
most of the people in the village had never seen the sea although it was not far away
if the list is empty the method simply returns none and no error message is printed
the young engineer explained how the bridge had been designed to survive the storms
reading a good book in the evening is one of the simplest pleasures in a busy life
the committee decided that the proposal should be reviewed again by outside experts
every morning the baker opens the shop early and the smell of bread fills the street
you can change the default settings in the configuration file under the home folder
the results of the experiment were published last year in a well known journal
nobody could remember the last time the river had frozen over during the winter
the cache stores the most recent answers so that repeated queries return quickly
her research focuses on how language models learn the structure of natural text
the first chapter of the report describes the history of the project in detail
they agreed to meet in front of the library after the lecture had finished
a small error in the measurement can lead to a very large error in the final result
the garden behind the old house was full of flowers during the whole summer
this method parses the input string and builds a tree that represents the document
the price of the tickets includes dinner and a guided tour through the museum
when the server receives an invalid request it logs a warning and drops the message
we walked along the beach for hours and talked about our plans for the future
the new version of the compiler produces faster code for almost every benchmark
students often forget that a clear question is the most important part of research
the light in the kitchen was still on when they returned late from the theater
each worker takes one task from the queue and reports the result to the scheduler
it is hard to say whether the change improved anything because nothing was measured
the documentation explains how to install the package and run the example programs
in the afternoon the rain stopped and the sun came out over the quiet harbor
the loop terminates as soon as the condition becomes false or the limit is reached
a friendly neighbor helped us carry the heavy boxes up to the third floor
the answer depends on how many users are active at the same time on the platform
the teacher asked the class to describe the picture using only simple sentences
the program reads the whole buffer into memory before it starts the analysis
after a long discussion the family finally chose a name for the little white cat
the index maps each word to the list of documents in which the word appears
there was nothing unusual about the letter except the strange stamp on the envelope
the tool collects the log files from all machines and merges them into one archive
on clear nights you can see the lights of the city from the top of the hill
the update fixes several bugs and improves the stability of the whole system
she finished her coffee slowly and watched the boats move across the gray water
a database transaction either succeeds completely or leaves the data unchanged
the manual warns that the battery should be replaced only by trained personnel
their house stands at the end of the road next to a row of tall green trees
the parser skips blank lines and treats everything after the marker as a comment
success in this field requires patience and a willingness to learn from mistakes
the train to the capital leaves every hour from the second platform of the station
this simple example shows how the interface can be used to sort a list of names
the wind pushed the small boat far away from the shore during the night
the operating system schedules the threads so that every process makes progress
our team spent the whole week looking for the cause of the strange behavior
the recipe calls for two cups of flour and a spoon of honey mixed with warm milk
the survey shows that most readers prefer short articles with clear examples
the module exports a single class that manages the connection to the database
they painted the walls in bright colors to make the small room look larger
the function raises an exception when the argument is negative or too large
copyright notices name the owner of the code and the year of publication
this software is distributed in the hope that it will be useful to everyone
permission is granted to copy and modify the files under the same terms
the library is provided without any warranty of fitness for a purpose
see the license file in the root of the repository for the full text
all rights reserved by the python software foundation and its contributors
redistribution of the source code must retain the above copyright notice
the default encoding for all configuration files in this project is plain text
returns true when the given string is a valid identifier in the language
the helper converts the timestamp into the local timezone of the server
this wrapper catches the timeout and retries the request three more times
initialize the parser with the default options before reading the stream
the callback receives the parsed object and the number of bytes consumed
deprecated functions remain available for one release before removal
use the environment variable to override the path to the data directory
the scheduler keeps a sorted queue of timers and fires them in order
each entry expires after an hour unless another request renews it
value lookups return none when the key is missing from the store
the writer keeps field order stable so diffs stay small and readable
a byte order mark at the start of the file is skipped by the reader
the timer interval grows under memory pressure and shrinks when idle
tokens map to integer codes and the lexer emits them one at a time
the payload mirrors the upstream schema without renaming any fields
grows and shrinks follow the same rule so the buffer stays bounded
none of the workers saw the poison pill so the queue kept draining
keeps the connection open between requests to avoid the handshake cost
mark the record as dirty when any of its fields change value
under heavy load the pool spawns more workers up to the fixed cap
expire old sessions first and only then look at the access counts
order of the keys does not matter because the map sorts them on insert
the interval between retries doubles after every failed attempt
a tolerant parser accepts trailing commas and comments in the file
entries are grouped by day and the report shows one row per group
when the buffer fills the oldest samples fall out of the window
stored procedures run inside the same transaction as the caller
spectral analysis of the signal shows a peak near the carrier frequency
the density of comments varies a lot between files and projects
fields keep their declared order when the schema is serialized
wait for the lock holder to finish before touching the shared state
she walked along the river until the path turned away from the water
the orchard behind the farm gave more apples than the family could use
young readers often skip the long descriptions and follow the dialogue
the bridge sways a little in strong wind but the cables hold it firmly
market prices fell during the autumn and recovered before the holidays
the choir practiced in the old chapel because the hall was being painted
every visitor must sign the register at the gate before entering the site
the nurses checked the charts twice during the quiet night shift
his letters describe the long journey across the plains in great detail
the committee postponed the vote until the members could meet in person
fresh snow covered the trail so the guides marked the route with flags
the editor shortened the article without losing the author's argument
grain ships waited outside the harbor for the storm to pass
the observatory sits on a dry mountain far from the city lights
a gentle slope leads from the village square down to the lake shore
the tailor measured the cloth twice and cut it only once
their discussion moved from the budget to the schedule and back again
the shepherd counted the flock every evening before closing the gate
lamplight spilled through the window onto the wet cobblestones outside
"""

SEED["fr"] = """
le chat noir dort sur la chaise pendant que les enfants jouent dans le jardin
cette fonction renvoie le nombre de lignes du tableau après application du filtre
il faut toujours vérifier que le fichier existe avant de tenter de le lire
le temps était froid et les rues étaient vides quand elle est rentrée de la gare
merci de vérifier que tous les tests passent avant d envoyer vos modifications
il voulait savoir pourquoi la réunion avait été déplacée à la semaine suivante
la valeur du compteur augmente chaque fois qu une nouvelle demande arrive
la plupart des habitants du village n avaient jamais vu la mer pourtant proche
si la liste est vide la méthode renvoie simplement rien sans afficher d erreur
le jeune ingénieur expliquait comment le pont avait été conçu pour résister aux tempêtes
lire un bon livre le soir est un des plaisirs les plus simples d une vie occupée
le comité a décidé que la proposition serait examinée de nouveau par des experts
chaque matin le boulanger ouvre la boutique et l odeur du pain remplit la rue
vous pouvez modifier les réglages par défaut dans le fichier de configuration
les résultats de l expérience ont été publiés l année dernière dans une revue connue
personne ne se souvenait de la dernière fois où la rivière avait gelé en hiver
le cache garde les réponses récentes pour que les requêtes répétées soient rapides
ses recherches portent sur la manière dont les modèles apprennent la langue naturelle
le premier chapitre du rapport décrit en détail l histoire du projet
ils ont convenu de se retrouver devant la bibliothèque après la conférence
une petite erreur de mesure peut entraîner une très grande erreur dans le résultat
le jardin derrière la vieille maison était plein de fleurs pendant tout l été
cette méthode analyse la chaîne d entrée et construit un arbre du document
le prix des billets comprend le dîner et une visite guidée du musée
quand le serveur reçoit une requête invalide il enregistre un avertissement
nous avons marché longtemps sur la plage en parlant de nos projets d avenir
la nouvelle version du compilateur produit un code plus rapide presque partout
les étudiants oublient souvent qu une question claire est la partie la plus importante
la lumière de la cuisine était encore allumée quand ils sont rentrés du théâtre
chaque ouvrier prend une tâche dans la file et rapporte le résultat au planificateur
il est difficile de dire si le changement a amélioré quelque chose sans mesure
la documentation explique comment installer le paquet et lancer les exemples
dans l après midi la pluie a cessé et le soleil est revenu sur le port tranquille
la boucle se termine dès que la condition devient fausse ou que la limite est atteinte
un voisin aimable nous a aidés à monter les cartons lourds au troisième étage
la réponse dépend du nombre d utilisateurs actifs en même temps sur la plateforme
le professeur a demandé à la classe de décrire l image avec des phrases simples
le programme lit tout le tampon en mémoire avant de commencer l analyse
après une longue discussion la famille a enfin choisi un nom pour le petit chat blanc
l index associe chaque mot à la liste des documents où ce mot apparaît
il n y avait rien d inhabituel dans la lettre sauf le timbre étrange sur l enveloppe
l outil rassemble les journaux de toutes les machines et les fusionne en une archive
par les nuits claires on voit les lumières de la ville depuis le sommet de la colline
la mise à jour corrige plusieurs erreurs et améliore la stabilité du système
elle a fini son café lentement en regardant les bateaux traverser l eau grise
une transaction de base de données réussit entièrement ou laisse les données intactes
le manuel précise que la batterie doit être remplacée par du personnel formé
leur maison se trouve au bout de la route près d une rangée de grands arbres verts
l analyseur ignore les lignes vides et traite le reste comme un commentaire
réussir dans ce domaine demande de la patience et l envie d apprendre de ses erreurs
le train pour la capitale part toutes les heures du second quai de la gare
cet exemple simple montre comment l interface permet de trier une liste de noms
le vent a poussé le petit bateau loin du rivage pendant la nuit
le système d exploitation organise les fils pour que chaque processus avance
notre équipe a passé la semaine entière à chercher la cause du comportement étrange
la recette demande deux tasses de farine et une cuillère de miel avec du lait chaud
ceci calcule la somme des valeurs données par l utilisateur au démarrage
les enfants couraient dans le pré en ramassant des feuilles colorées
le soir nous restions près du feu à raconter de vieilles histoires
le train s arrêta un instant dans la petite gare avant de repartir
elle ouvrit la fenêtre pour laisser entrer l air frais du matin
le vieux pêcheur réparait son filet au bord du port tranquille
il faut encore vérifier les résultats avant d envoyer le rapport
la bibliothèque reste ouverte plus tard pendant l été
la nouvelle méthode fait gagner du temps et réduit les coûts
sans règles claires le travail en équipe devient vite difficile
la carte montre le chemin à travers la forêt jusqu à la cabane
sa réponse était courte mais aimable et tout le monde fut content
le professeur expliqua l exercice avec un exemple très simple
"""

SEED["es"] = """
el gato negro duerme sobre la silla mientras los niños juegan en el jardín
esta función devuelve el número de filas de la tabla después de aplicar el filtro
siempre hay que comprobar que el archivo existe antes de intentar abrirlo
el tiempo era frío y las calles estaban vacías cuando volvió a casa desde la estación
por favor asegúrate de que todas las pruebas pasan antes de enviar tus cambios
quería saber por qué la reunión se había movido a la semana siguiente sin aviso
el valor del contador aumenta cada vez que llega una nueva petición al servidor
la mayoría de la gente del pueblo nunca había visto el mar aunque no estaba lejos
si la lista está vacía el método devuelve nada y no imprime ningún mensaje de error
el joven ingeniero explicó cómo el puente fue diseñado para resistir las tormentas
leer un buen libro por la noche es uno de los placeres más simples de la vida
el comité decidió que la propuesta debía ser revisada de nuevo por expertos externos
cada mañana el panadero abre la tienda y el olor del pan llena la calle
puedes cambiar los ajustes por defecto en el archivo de configuración de tu carpeta
los resultados del experimento se publicaron el año pasado en una revista conocida
nadie recordaba la última vez que el río se había helado durante el invierno
la caché guarda las respuestas recientes para que las consultas repetidas sean rápidas
su investigación estudia cómo los modelos aprenden la estructura del lenguaje natural
el primer capítulo del informe describe con detalle la historia del proyecto
acordaron encontrarse delante de la biblioteca después de la conferencia
un pequeño error de medida puede producir un error muy grande en el resultado final
el jardín detrás de la casa vieja estaba lleno de flores durante todo el verano
este método analiza la cadena de entrada y construye un árbol que representa el documento
el precio de las entradas incluye la cena y una visita guiada por el museo
cuando el servidor recibe una petición inválida registra un aviso y descarta el mensaje
caminamos por la playa durante horas hablando de nuestros planes para el futuro
la nueva versión del compilador genera código más rápido en casi todas las pruebas
los estudiantes olvidan que una pregunta clara es la parte más importante del trabajo
la luz de la cocina seguía encendida cuando volvieron tarde del teatro
cada trabajador toma una tarea de la cola y entrega el resultado al planificador
es difícil decir si el cambio mejoró algo porque no se midió nada
la documentación explica cómo instalar el paquete y ejecutar los programas de ejemplo
por la tarde dejó de llover y el sol salió sobre el puerto tranquilo
el bucle termina en cuanto la condición se vuelve falsa o se alcanza el límite
un vecino amable nos ayudó a subir las cajas pesadas hasta el tercer piso
la respuesta depende de cuántos usuarios están activos al mismo tiempo en la plataforma
la maestra pidió a la clase que describiera la imagen con frases sencillas
el programa lee todo el búfer en memoria antes de comenzar el análisis
después de una larga discusión la familia eligió por fin un nombre para el gato blanco
el índice asigna cada palabra a la lista de documentos donde aparece esa palabra
no había nada raro en la carta salvo el sello extraño del sobre
la herramienta junta los registros de todas las máquinas en un solo archivo
en las noches claras se ven las luces de la ciudad desde lo alto de la colina
la actualización corrige varios fallos y mejora la estabilidad de todo el sistema
terminó su café despacio mirando los barcos cruzar el agua gris
una transacción de base de datos se completa entera o deja los datos sin cambios
el manual advierte que la batería debe ser cambiada solo por personal preparado
su casa está al final del camino junto a una fila de árboles altos y verdes
el analizador salta las líneas vacías y trata el resto como un comentario
tener éxito en este campo requiere paciencia y ganas de aprender de los errores
los niños corrían por el prado recogiendo hojas de colores
por la noche nos sentábamos junto al fuego a contar historias antiguas
el tren se detuvo un momento en la pequeña estación antes de seguir
ella abrió la ventana para dejar entrar el aire fresco de la mañana
el viejo pescador arreglaba su red a la orilla del puerto tranquilo
todavía hay que revisar los resultados antes de mandar el informe
la biblioteca abre hasta más tarde durante el verano
el nuevo método ahorra tiempo y reduce los costos de producción
sin reglas claras el trabajo en equipo se vuelve difícil muy pronto
el mapa muestra el camino por el bosque hasta la cabaña del lago
su respuesta fue corta pero amable y todos quedaron contentos
la maestra explicó el ejercicio otra vez con un ejemplo sencillo
"""

SEED["it"] = """
il gatto nero dorme sulla sedia mentre i bambini giocano in giardino
questa funzione restituisce il numero di righe della tabella dopo il filtro
bisogna sempre controllare che il file esista prima di provare ad aprirlo
il tempo era freddo e le strade erano vuote quando tornò a casa dalla stazione
per favore controlla che tutti i test passino prima di inviare le modifiche
voleva sapere perché la riunione era stata spostata alla settimana successiva
il valore del contatore aumenta ogni volta che arriva una nuova richiesta
la maggior parte della gente del paese non aveva mai visto il mare
se la lista è vuota il metodo restituisce niente e non stampa alcun errore
il giovane ingegnere spiegò come il ponte fosse stato progettato per le tempeste
leggere un buon libro la sera è uno dei piaceri più semplici della vita
il comitato decise che la proposta doveva essere rivista da esperti esterni
ogni mattina il fornaio apre il negozio e il profumo del pane riempie la strada
puoi cambiare le impostazioni predefinite nel file di configurazione
i risultati dell esperimento sono stati pubblicati l anno scorso su una rivista nota
nessuno ricordava l ultima volta che il fiume era gelato durante l inverno
la cache conserva le risposte recenti così le richieste ripetute tornano subito
la sua ricerca studia come i modelli imparano la struttura della lingua naturale
il primo capitolo del rapporto descrive in dettaglio la storia del progetto
decisero di incontrarsi davanti alla biblioteca dopo la conferenza
un piccolo errore di misura può portare a un errore molto grande nel risultato
il giardino dietro la vecchia casa era pieno di fiori per tutta l estate
questo metodo analizza la stringa di ingresso e costruisce un albero del documento
il prezzo dei biglietti comprende la cena e una visita guidata al museo
quando il server riceve una richiesta non valida registra un avviso
abbiamo camminato lungo la spiaggia per ore parlando dei nostri progetti
la nuova versione del compilatore produce codice più veloce quasi ovunque
gli studenti dimenticano che una domanda chiara è la parte più importante
la luce della cucina era ancora accesa quando tornarono tardi dal teatro
ogni operaio prende un compito dalla coda e riporta il risultato al gestore
è difficile dire se la modifica abbia migliorato qualcosa senza misure
la documentazione spiega come installare il pacchetto ed eseguire gli esempi
nel pomeriggio la pioggia smise e il sole tornò sul porto tranquillo
il ciclo termina appena la condizione diventa falsa o si raggiunge il limite
un vicino gentile ci ha aiutato a portare le scatole pesanti al terzo piano
la risposta dipende da quanti utenti sono attivi nello stesso momento
l insegnante chiese alla classe di descrivere l immagine con frasi semplici
il programma legge tutto il contenuto in memoria prima di iniziare l analisi
dopo una lunga discussione la famiglia scelse un nome per il gattino bianco
l indice collega ogni parola alla lista dei documenti in cui appare
non c era nulla di strano nella lettera tranne il francobollo sulla busta
lo strumento raccoglie i registri di tutte le macchine in un solo archivio
nelle notti serene si vedono le luci della città dalla cima della collina
l aggiornamento corregge molti difetti e migliora la stabilità del sistema
finì il suo caffè lentamente guardando le barche attraversare l acqua grigia
una transazione del database riesce del tutto oppure lascia i dati intatti
il manuale avverte che la batteria va sostituita solo da personale esperto
la loro casa si trova in fondo alla strada vicino a una fila di alberi verdi
l analizzatore salta le righe vuote e tratta il resto come un commento
per riuscire in questo campo servono pazienza e voglia di imparare dagli errori
i bambini correvano nel prato raccogliendo foglie colorate
la sera restavamo accanto al fuoco a raccontare vecchie storie
il treno si fermò un attimo nella piccola stazione prima di ripartire
lei aprì la finestra per far entrare l aria fresca del mattino
il vecchio pescatore riparava la rete in riva al porto tranquillo
bisogna ancora controllare i risultati prima di spedire il rapporto
la biblioteca resta aperta più a lungo durante l estate
il nuovo metodo fa risparmiare tempo e riduce i costi di produzione
senza regole chiare il lavoro di squadra diventa presto difficile
la mappa mostra il sentiero nel bosco fino alla capanna sul lago
la sua risposta fu breve ma gentile e tutti rimasero contenti
la maestra spiegò di nuovo l esercizio con un esempio semplice
"""

SEED["de"] = """
die schwarze katze schläft auf dem stuhl während die kinder im garten spielen
diese funktion liefert die anzahl der zeilen der tabelle nach dem filter zurück
man sollte immer prüfen ob die datei existiert bevor man sie öffnen will
das wetter war kalt und die straßen waren leer als sie vom bahnhof nach hause ging
bitte stelle sicher dass alle tests bestehen bevor du deine änderungen schickst
er wollte wissen warum die besprechung ohne ankündigung verschoben worden war
der wert des zählers steigt jedes mal wenn eine neue anfrage am server ankommt
die meisten leute im dorf hatten das meer noch nie gesehen obwohl es nah war
wenn die liste leer ist gibt die methode einfach nichts zurück und meldet keinen fehler
der junge ingenieur erklärte wie die brücke gebaut wurde um stürme zu überstehen
abends ein gutes buch zu lesen ist eine der einfachsten freuden im leben
der ausschuss beschloss dass der vorschlag erneut von externen fachleuten geprüft wird
jeden morgen öffnet der bäcker den laden und der duft von brot erfüllt die straße
du kannst die standardeinstellungen in der konfigurationsdatei im heimordner ändern
die ergebnisse des versuchs wurden letztes jahr in einer bekannten zeitschrift veröffentlicht
niemand konnte sich erinnern wann der fluss zuletzt im winter zugefroren war
der zwischenspeicher behält die letzten antworten damit wiederholte anfragen schnell sind
ihre forschung untersucht wie sprachmodelle die struktur natürlicher texte lernen
das erste kapitel des berichts beschreibt die geschichte des projekts im detail
sie verabredeten sich vor der bibliothek nachdem der vortrag beendet war
ein kleiner fehler in der messung kann zu einem sehr großen fehler im ergebnis führen
der garten hinter dem alten haus war den ganzen sommer voller blumen
diese methode zerlegt die eingabe und baut einen baum der das dokument darstellt
der preis der karten umfasst das abendessen und eine führung durch das museum
wenn der server eine ungültige anfrage erhält schreibt er eine warnung ins protokoll
wir gingen stundenlang am strand entlang und sprachen über unsere pläne
die neue fassung des übersetzers erzeugt bei fast jedem test schnelleren code
studenten vergessen oft dass eine klare frage der wichtigste teil der arbeit ist
das licht in der küche brannte noch als sie spät aus dem theater zurückkamen
jeder arbeiter nimmt eine aufgabe aus der warteschlange und meldet das ergebnis
es ist schwer zu sagen ob die änderung etwas verbessert hat denn nichts wurde gemessen
die anleitung erklärt wie man das paket installiert und die beispiele startet
am nachmittag hörte der regen auf und die sonne schien über dem stillen hafen
die schleife endet sobald die bedingung falsch wird oder die grenze erreicht ist
ein freundlicher nachbar half uns die schweren kisten in den dritten stock zu tragen
die antwort hängt davon ab wie viele nutzer gleichzeitig auf der plattform aktiv sind
die lehrerin bat die klasse das bild mit einfachen sätzen zu beschreiben
das programm liest den gesamten puffer in den speicher bevor die auswertung beginnt
nach langer diskussion wählte die familie endlich einen namen für die kleine katze
der index ordnet jedem wort die liste der dokumente zu in denen es vorkommt
an dem brief war nichts ungewöhnlich außer der seltsamen briefmarke auf dem umschlag
das werkzeug sammelt die protokolle aller rechner und fügt sie zu einem archiv zusammen
in klaren nächten sieht man die lichter der stadt vom gipfel des hügels
die aktualisierung behebt mehrere fehler und verbessert die stabilität des systems
sie trank ihren kaffee langsam und sah den booten auf dem grauen wasser zu
eine transaktion gelingt entweder vollständig oder lässt die daten unverändert
das handbuch warnt dass der akku nur von geschultem personal getauscht werden darf
ihr haus steht am ende der straße neben einer reihe hoher grüner bäume
der zerleger überspringt leere zeilen und behandelt den rest als kommentar
erfolg auf diesem gebiet verlangt geduld und den willen aus fehlern zu lernen
die kinder liefen über die wiese und sammelten bunte blätter für die schule
am abend saßen wir am feuer und erzählten geschichten aus alten zeiten
der zug hielt kurz im kleinen bahnhof bevor er weiter in die berge fuhr
sie öffnete das fenster und ließ die kühle morgenluft ins zimmer
der alte fischer reparierte sein netz am rand des ruhigen hafens
wir müssen die ergebnisse noch prüfen bevor wir den bericht verschicken
die bibliothek bleibt im sommer länger geöffnet als im winter
das neue verfahren spart zeit und senkt die kosten der fertigung
ohne klare regeln wird die zusammenarbeit im team schnell schwierig
die karte zeigt den weg durch den wald bis zur kleinen hütte am see
seine antwort war kurz aber freundlich und alle waren zufrieden
der lehrer erklärte die aufgabe noch einmal mit einem einfachen beispiel
die stadt baut eine neue brücke über den fluss im nächsten jahr
viele besucher kamen trotz des schlechten wetters zur ausstellung
das programm speichert die datei und schließt danach alle fenster
"""

SEED["pt"] = """
o gato preto dorme na cadeira enquanto as crianças brincam no jardim
esta função devolve o número de linhas da tabela depois de aplicar o filtro
é preciso sempre verificar se o arquivo existe antes de tentar abrir
o tempo estava frio e as ruas estavam vazias quando ela voltou da estação
por favor confirme que todos os testes passam antes de enviar as mudanças
ele queria saber por que a reunião tinha sido adiada para a semana seguinte
o valor do contador aumenta cada vez que um novo pedido chega ao servidor
a maior parte das pessoas da aldeia nunca tinha visto o mar embora fosse perto
se a lista está vazia o método devolve nada e não imprime mensagem de erro
o jovem engenheiro explicou como a ponte foi desenhada para resistir às tempestades
ler um bom livro à noite é um dos prazeres mais simples de uma vida ocupada
o comité decidiu que a proposta devia ser revista de novo por peritos externos
cada manhã o padeiro abre a loja e o cheiro do pão enche a rua
podes mudar as definições padrão no ficheiro de configuração da tua pasta
os resultados da experiência foram publicados no ano passado numa revista conhecida
ninguém se lembrava da última vez que o rio tinha gelado durante o inverno
a cache guarda as respostas recentes para que as consultas repetidas voltem depressa
a sua pesquisa estuda como os modelos aprendem a estrutura da língua natural
o primeiro capítulo do relatório descreve em detalhe a história do projeto
combinaram encontrar se em frente da biblioteca depois da palestra
um pequeno erro de medida pode levar a um erro muito grande no resultado final
o jardim atrás da casa velha estava cheio de flores durante todo o verão
este método analisa a cadeia de entrada e constrói uma árvore do documento
o preço dos bilhetes inclui o jantar e uma visita guiada ao museu
quando o servidor recebe um pedido inválido regista um aviso e descarta a mensagem
andámos pela praia durante horas falando dos nossos planos para o futuro
a nova versão do compilador gera código mais rápido em quase todos os testes
os estudantes esquecem que uma pergunta clara é a parte mais importante do trabalho
a luz da cozinha ainda estava acesa quando voltaram tarde do teatro
cada trabalhador tira uma tarefa da fila e entrega o resultado ao escalonador
é difícil dizer se a mudança melhorou alguma coisa porque nada foi medido
a documentação explica como instalar o pacote e executar os programas de exemplo
à tarde a chuva parou e o sol apareceu sobre o porto tranquilo
o ciclo termina assim que a condição se torna falsa ou o limite é atingido
um vizinho simpático ajudou nos a levar as caixas pesadas até ao terceiro andar
a resposta depende de quantos utilizadores estão ativos ao mesmo tempo
a professora pediu à turma que descrevesse a imagem com frases simples
o programa lê todo o conteúdo para a memória antes de começar a análise
depois de uma longa conversa a família escolheu enfim um nome para o gato branco
o índice liga cada palavra à lista de documentos onde essa palavra aparece
não havia nada de estranho na carta salvo o selo esquisito do envelope
a ferramenta junta os registos de todas as máquinas num único arquivo
nas noites claras veem se as luzes da cidade do alto da colina
a atualização corrige vários defeitos e melhora a estabilidade de todo o sistema
ela acabou o café devagar olhando os barcos atravessarem a água cinzenta
uma transação de base de dados ou se completa inteira ou deixa os dados intactos
o manual avisa que a bateria deve ser trocada apenas por pessoal treinado
a casa deles fica no fim da estrada ao lado de uma fila de árvores altas
o analisador salta as linhas vazias e trata o resto como um comentário
ter sucesso neste campo exige paciência e vontade de aprender com os erros
as crianças corriam pelo prado apanhando folhas coloridas
à noite ficávamos perto do fogo a contar histórias antigas
o comboio parou um instante na pequena estação antes de seguir
ela abriu a janela para deixar entrar o ar fresco da manhã
o velho pescador consertava a rede na beira do porto tranquilo
ainda é preciso rever os resultados antes de enviar o relatório
a biblioteca fica aberta até mais tarde durante o verão
o novo método poupa tempo e reduz os custos de produção
sem regras claras o trabalho em equipa torna se difícil depressa
o mapa mostra o caminho pela floresta até à cabana do lago
a resposta dele foi curta mas simpática e todos ficaram contentes
a professora explicou o exercício outra vez com um exemplo simples
"""

SEED["ru"] = """
черная кошка спит на стуле пока дети играют в саду за старым домом
эта функция возвращает число строк таблицы после применения фильтра
всегда нужно проверять что файл существует прежде чем пытаться его открыть
погода была холодной и улицы были пусты когда она возвращалась домой с вокзала
пожалуйста убедитесь что все тесты проходят перед отправкой изменений
он хотел знать почему собрание перенесли на следующую неделю без предупреждения
значение счетчика увеличивается каждый раз когда приходит новый запрос
большинство жителей деревни никогда не видели моря хотя оно было недалеко
если список пуст метод просто ничего не возвращает и не печатает ошибок
молодой инженер объяснил как мост был спроектирован чтобы выдерживать бури
читать хорошую книгу вечером одно из самых простых удовольствий в жизни
комитет решил что предложение должно быть рассмотрено внешними экспертами
каждое утро пекарь открывает лавку и запах хлеба наполняет улицу
вы можете изменить настройки по умолчанию в файле конфигурации
результаты опыта были опубликованы в прошлом году в известном журнале
никто не помнил когда река в последний раз замерзала зимой
кеш хранит последние ответы чтобы повторные запросы возвращались быстро
ее исследование изучает как модели учат структуру естественного языка
первая глава отчета подробно описывает историю проекта
они договорились встретиться у библиотеки после окончания лекции
маленькая ошибка измерения может привести к очень большой ошибке в итоге
сад за старым домом был полон цветов все лето
этот метод разбирает входную строку и строит дерево документа
цена билетов включает ужин и экскурсию по музею
когда сервер получает неверный запрос он записывает предупреждение
мы долго гуляли по берегу и говорили о планах на будущее
новая версия компилятора дает более быстрый код почти во всех тестах
студенты забывают что ясный вопрос самая важная часть исследования
свет на кухне еще горел когда они поздно вернулись из театра
каждый работник берет задачу из очереди и сообщает результат планировщику
"""

SEED["zh"] = """
黑猫睡在椅子上孩子们在花园里玩耍
这个函数在应用过滤器之后返回表格的行数
打开文件之前应该先检查文件是否存在
天气很冷街道空空荡荡她从车站走回家
请确认所有测试通过之后再提交你的修改
他想知道为什么会议被推迟到下个星期
每当新的请求到达服务器计数器的值就会增加
村里大多数人从来没有见过大海虽然海并不远
如果列表为空这个方法直接返回空值不打印错误
年轻的工程师解释了这座桥如何设计以抵御风暴
晚上读一本好书是忙碌生活中最简单的乐趣
委员会决定这份提案要再次交给外部专家审查
每天早晨面包师打开店门面包的香味充满街道
你可以在配置文件里修改默认设置
实验结果去年发表在一本知名的期刊上
没有人记得这条河上一次在冬天结冰是什么时候
缓存保存最近的答案使重复的查询很快返回
她的研究关注语言模型如何学习自然语言的结构
报告的第一章详细描述了项目的历史
他们约好讲座结束后在图书馆前见面
测量中的小误差可能导致最终结果的大误差
老房子后面的花园整个夏天开满了花
这个方法解析输入字符串并构建表示文档的树
门票的价格包括晚餐和博物馆的导览
服务器收到无效请求时会记录警告并丢弃消息
我们沿着海滩走了几个小时谈论未来的计划
新版本的编译器在几乎所有测试中生成更快的代码
学生们常常忘记清晰的问题是研究中最重要的部分
"""

SEED["ja"] = """
黒い猫は椅子の上で眠り子供たちは庭で遊んでいる
この関数はフィルタを適用した後で表の行数を返す
ファイルを開く前に存在するかどうかを必ず確認するべきだ
天気は寒く通りは人気がなく彼女は駅から歩いて帰った
変更を送る前にすべてのテストが通ることを確認してください
彼は会議がなぜ来週に延期されたのか知りたかった
新しい要求がサーバーに届くたびにカウンタの値が増える
村のほとんどの人は海が近いのに一度も見たことがなかった
リストが空ならこのメソッドは何も返さずエラーも表示しない
若い技師は橋が嵐に耐えるよう設計されたと説明した
夜に良い本を読むことは忙しい生活の中で最も単純な楽しみだ
委員会は提案を外部の専門家に再び審査させると決めた
毎朝パン屋が店を開けるとパンの香りが通りに満ちる
設定ファイルで既定の設定を変更することができる
実験の結果は昨年よく知られた雑誌に発表された
川が冬に凍った最後の時を誰も覚えていなかった
キャッシュは最近の答えを保存し繰り返しの問い合わせは速く返る
彼女の研究は言語モデルが自然な文章の構造を学ぶ方法を調べる
報告書の最初の章は計画の歴史を詳しく述べている
講義が終わった後で図書館の前で会うことに決めた
測定の小さな誤りが最終結果の大きな誤りにつながることがある
古い家の裏の庭は夏の間ずっと花でいっぱいだった
この方法は入力の文字列を解析して文書を表す木を作る
切符の値段には夕食と博物館の案内が含まれている
サーバーは無効な要求を受け取ると警告を記録して捨てる
私たちは何時間も浜辺を歩き将来の計画について話した
新しい版の翻訳器はほとんどの試験でより速い符号を作る
学生は明確な問いが研究で最も大切な部分だと忘れがちだ
"""

# ---------------------------------------------------------------------------
# English lexicon: base vocabulary plus regular inflections.
# ---------------------------------------------------------------------------

FUNCTION_WORDS = """
a about above across after again against all almost alone along already also
although always am among an and another any anybody anyone anything anywhere
are around as at away back be because been before behind being below beneath
beside besides between beyond both but by can cannot could did do does doing
done down during each either else enough even ever every everybody everyone
everything everywhere few for from further had has have having he her here
hers herself him himself his how however i if in indeed inside instead into
is it its itself just least less like many may me might mine more most much
must my myself near neither never nevertheless no nobody none nor not nothing
now nowhere of off often on once one only onto or other others otherwise our
ours ourselves out outside over own per perhaps quite rather really same
several shall she should since so some somebody someone something sometimes
somewhere still such than that the their theirs them themselves then there
therefore these they this those through throughout thus to together too
toward towards under until unto up upon us very was we were what whatever
when whenever where whereas wherever whether which while who whoever whom
whose why will with within without would yes yet you your yours yourself
yourselves ok okay also cannot hello goodbye please thanks thank sorry maybe
"""

IRREGULAR = """
men women children feet teeth mice geese people person leaves lives knives
wives shelves halves selves wolves went gone saw seen came come took taken
gave given wrote written drove driven rode ridden rose risen chose chosen
spoke spoken broke broken stole stolen woke woken froze frozen got gotten
began begun ran swam swum drank drunk sang sung sank sunk rang rung sat
stood understood found bought brought thought caught taught sought fought
told held kept slept swept wept felt left meant sent spent built lent bent
lost said paid laid made heard read led fed bled bred fled sped met shot
put cut set hit hurt let shut cost quit spread burst split fit knew known
grew grown threw thrown flew flown blew blown drew drawn wore worn tore
torn bore born swore sworn ate eaten fell fallen beat beaten bit bitten
hid hidden forgot forgotten forgave forgiven better best worse worst
farther furthest elder eldest is are was were been am has had does did
"""

# Base vocabulary, grouped loosely by topic. Nouns, verbs and adjectives
# here feed the inflection rules below.
BASE = """
ability able absence absolute abstract accept access accident account
accurate achieve acid act action active activity actor actual add address
adequate adjust admit adopt adult advance advantage adventure advice advise
affair affect afford afraid age agency agent agree agreement ahead aim air
alarm album alert algorithm alive allocate allow alter alternative amaze
amount analysis analyze ancient anger angle angry animal announce annual
answer apart apartment apology apparent appeal appear append apple
application apply appoint approach appropriate approve area argue argument
arm army arrange array arrest arrive arrow art article artist ask aspect
assert assess asset assign assist assume assure atom attach attack attempt
attend attention attitude attract audience author automatic autumn
available average avoid award aware baby bad bag balance ball band bank bar
base basic basis batch battle beach bean bear beauty bed begin behavior
belief believe bell belong bench benefit bet big bill bind bird birth bit
bite bitter black blame blank blanket blind block blood blow blue board
boat body boil bold bone book boot border borrow boss bottle bottom bound
boundary bowl box boy brain branch brave bread break breakfast breath
breathe brick bridge brief bright bring broad broken brother brown brush
bubble bucket budget buffer bug build bulk bundle burn bus business busy
butter button buy byte cache cake calculate call calm camera camp campaign
cancel candidate capacity capital captain capture car card care career
careful carpet carry case cast cat catalog catch category cause cell center
central century certain chain chair challenge chance change channel chapter
character charge chart cheap check cheese chest chicken chief child choice
choose church circle circuit city civil claim class classify clause clean
clear clever click client climate climb clock clone close cloth cloud
cluster coach coast coat code coffee cold collect college color column
combine come comfort command comment commit committee common communicate
community company compare compile complete complex component compute
computer concept concern conclude concrete condition conduct conference
confident configure confirm conflict confuse connect consider consist
constant construct consume contact contain content contest context continue
contract contrast contribute control convert cook cool copy core corner
correct cost cotton count counter country couple courage course court cover
cow crash create credit crew crime critical cross crowd crucial cruel crush
cry culture cup cure curious current curve custom customer cut cycle daily
damage dance danger dark data database date daughter day dead deal dear
debate debug debt decade decide decision declare decline decode decrease
deep default defeat defend define degree delay delegate delete deliver
demand deny department depend deploy depth derive describe desert deserve
design desire desk destroy detail detect develop device dictionary die diet
differ difference different difficult dig digital dinner direct direction
dirty disable discover discuss disease dish disk dismiss display distance
distant distinct distribute district divide doctor document dog domain door
double doubt download draft drama dream dress drink drive drop dry duck due
dump dust duty eager ear early earn earth east easy eat economy edge edit
education effect effective effort egg elect element elegant embed emerge
emit emotion emphasis employ empty enable encode encourage end enemy energy
engage engine enjoy enter entire entity entry environment equal equipment
era error escape essay essential establish estate estimate evaluate evening
event evidence exact examine example exceed except exchange excite exclude
excuse execute exercise exist exit expand expect expense experience
experiment expert explain explore export expose express extend extent
external extra extract extreme eye face fact factor factory fail fair faith
fall false familiar family famous fan far farm fashion fast fat fate father
fault favor fear feature feed feel fence fetch fever field fierce fight
figure file fill film filter final find fine finger finish fire firm first
fish fit fix flag flat flavor flee flexible flight float flood floor flour
flow flower fly focus fold folder follow food foot force foreign forest
forget form formal format fortune forward frame free freeze frequent fresh
friend front fruit fuel full fun function fund future gain game gap garden
gas gate gather general generate gentle gesture get giant gift girl give
glad glass global goal gold good govern grab grade grand grant graph grass
gray great green greet grid ground group grow growth guard guess guest
guide gun habit hair half hall hand handle hang happen happy hard hardware
harm hash hat hate have head health hear heart heat heavy height hello help
hide high hill hint hire history hit hold hole holiday home honest honor
hook hope horse hospital host hot hotel hour house huge human humor hunt
hurry ice idea ideal identify identity ignore ill image imagine impact
implement imply import important improve include income increase indeed
index indicate industry infer inform initial inject injury inner input
insert inside insight install instance instant instead instruction
instrument insurance intend intense interact interest interface internal
interval interview introduce invent invest investigate invite invoke
involve iron island issue item iterate job join joint joke journal journey
joy judge juice jump just justice justify keen keep kernel key kick kid
kill kind king kiss kitchen knee knife knock know label labor lack lady
lake land language large last late laugh launch law lawyer layer layout
lazy lead leader leaf league lean learn leave lecture left leg legal lemon
lend length lesson let letter level library license lie life lift light
like limit line link lip list listen literature little live load loan
local lock log logic long look loop loose lose loss lot loud love low
lower luck lunch machine magic mail main maintain major make man manage
manager manner manual map march margin mark market marry mask mass master
match material math matter mature maximum meal mean measure meat media
medical medium meet member memory mention menu merge mess message metal
method middle might mild mile milk mind minimum minor minute mirror miss
mission mistake mix mixture mobile mode model modern modest modify module
moment money monitor month mood moon moral morning most mother motion
motor mount mountain mouse mouth move movie much mud multiple muscle
museum music mutual mystery nail name narrow nation native nature near
neat necessary neck need needle negative neighbor nerve nest net network
neutral new news next nice night node noise normal north nose note notice
notion novel null number nurse nut object observe obtain obvious occasion
occupy occur ocean odd offer office officer official offset oil old open
operate opinion opportunity oppose option orange order ordinary organ
organize origin original other ought ounce output outer oven over overall
overlap override owe own owner pace pack package pad page pain paint pair
pale pan panel panic paper paragraph parallel parameter parent park parse
part particle particular partner party pass passage passenger past paste
pat patch path patient pattern pause pay peace peak pen penalty pencil
people pepper percent perfect perform period permanent permit person
phase phone photo phrase physical piano pick picture piece pile pilot pin
pine pink pipe pitch pity place plain plan plane planet plant plastic
plate platform play pleasant please pleasure plenty plot pocket poem poet
point pointer police policy polish polite political pool poor pop popular
population port portion position positive possess possible post pot
potato pour power practical practice praise pray predict prefer prefix
prepare presence present preserve president press pressure pretty prevent
price pride primary prime principle print prior priority prison private
prize probable problem procedure proceed process produce product
profession professor profile profit program progress project promise
promote prompt proof proper property proportion propose protect protest
protocol proud prove provide public publish pull pump punish pure purple
purpose push put puzzle qualify quality quantity quarter queen query
question queue quick quiet quote race radio rail rain raise random range
rank rapid rare rate ratio raw reach react read ready real reason rebuild
recall receive recent recipe recognize recommend record recover red reduce
refer reference reflect reform refresh refuse regard region register
regret regular reject relate relation relative relax release relevant
relief rely remain remark remember remind remote remove render rent repair
repeat replace reply report represent request require rescue research
reserve reset resident resist resolve resource respect respond response
rest restore result resume retain retire retry return reveal revenue
reverse review reward rich ride right ring rise risk river road rob rock
role roll roof room root rope rough round route routine row royal rub
rubber rude rule run rural rush sad safe safety sail salad salary sale
salt same sample sand satisfy sauce save scale scan scene schedule schema
scheme school science score scratch screen script sea search season seat
second secret section sector secure see seed seek seem segment select
self sell send senior sense sentence separate sequence series serious
serve server service session settle setup shade shadow shake shall shape
share sharp sheep sheet shelf shell shift shine ship shirt shock shoe
shoot shop short shot shoulder shout show shower shut sick side sight
sign signal silent silly silver similar simple since sing single sink
sister sit site situation size skill skin skip sky sleep slice slide
slight slip slope slow small smart smell smile smoke smooth snake snow
social socket soft software soil soldier solid solution solve some son
song soon sort soul sound soup source south space spare speak special
specific speech speed spell spend spin spirit split sport spot spread
spring square stable stack staff stage stair stamp stand standard star
stare start state statement station status stay steady steal steam steel
steep stem step stick stiff still stock stomach stone stop storage store
storm story straight strange stream street strength stress stretch strict
strike string strip stroke strong structure struggle student study stuff
stupid style subject submit substance subtle succeed success sudden suffer
sugar suggest suit summary summer sun supply support suppose sure surface
surger surprise surround survey survive suspect swap sweet swim switch
symbol sympathy syntax system table tail take tale talent talk tall tank
tape target task taste tax tea teach team tear technical technique
technology telephone television tell temperature template temporary tend
tender tension term terminal terrible test text thank theater theme theory
thick thin thing think thread threat throat throw thumb ticket tide tie
tight time tiny tip tired tissue title toast today toe token tomato
tomorrow tone tongue tonight tool tooth top topic total touch tough tour
toward towel tower town toy trace track trade tradition traffic trail
train transfer transform translate transport trap travel treat tree trend
trial trick trigger trim trip trouble truck true trust truth try tube tune
turn twist type typical ugly unable uncle under understand unit universe
university unknown update upgrade upload upper upset urban urge usage use
useful user usual utility vacation valid valley value variable variety
various vast vector vegetable vehicle verify verse version vertical very
vessel victim victory video view village violent virtual visible visit
visual vital voice volume vote wage wait wake walk wall want war warm warn
wash waste watch water wave way weak wealth weapon wear weather web wedding
week weigh weight welcome well west wet wheel wide wife wild win wind
window wine wing winner winter wire wise wish wonder wood wool word work
worker world worry worth wrap write wrong yard year yellow yesterday yield
young zero zone
"""


BASE2 = """
abandon abbreviation abolish absorb absurd abundance abuse academy
accelerate accent accompany accomplish accord accumulate accuse ache
acknowledge acquire acre adapt addict addition adhere adjacent adjective
administer admire admission adolescent adore advertise advocate aerial
affection affiliate affirm agenda aggregate agony agriculture aid aircraft
airline airport aisle alcohol alien align alike alley alliance alligator
allocate ally almond alphabet altar altitude aluminum amateur ambassador
amber ambition ambulance amend ammunition amplify amuse analog anchor
anchovy anecdote angel ankle anniversary annotate announce annoy anonymous
antenna anthem anticipate antique anxiety anxious apologize apparatus
appetite applaud appliance appreciate apprentice approximate apricot
aquarium arbitrary arcade arch archive arena arise arithmetic armor
aroma arrogant arsenal artery artifact artificial ash ashamed aside
asparagus assassin assemble assembly assign associate assortment
asterisk asthma astonish astronaut astronomy asylum athlete atlas
atmosphere attic attorney auction audio audit augment aunt authentic
authority autograph automate autonomy avalanche avenue aviation awake
awesome awful awkward axis bachelor backbone backward bacon bacteria
badge baggage bake bald ballad balloon ballot bamboo banana bandage
banish banjo banner banquet baptize barber bare bargain bark barley barn
barrel barrier basement basin basket bass bat bath bathe bathroom
battery bay bazaar beacon beam beard beast beckon bee beef beer beet
beetle beggar behalf behave beige belly beloved belt bend berry bestow
betray beverage beware bicycle bid bin biography biology birthday
biscuit bishop bison blade blast blaze bleach bless blister blizzard
blossom blouse blueprint blunt blur blush boast bodyguard bolt bomb
bonus bookcase bookmark boom boost booth borough bounce bouquet bourbon
boutique bracelet bracket brag braid brake brand brass brew bribe bride
brigade brilliant brim broadcast broccoli brochure broker bronze broom
broth browse bruise brutal bub buckle bud buddy budge buffalo bulb
bullet bulletin bump bun bunch bunny burden bureau burglar burial
burrow bury bush butcher butterfly cab cabbage cabin cabinet cable
cactus cafe cage calendar calf caliber calibrate canal canary candle
candy cane canoe canvas canyon capable cape capsule caption captive
caravan carbon cardboard cardinal cargo carnival carrot cart cartoon
cartridge carve cashier casino casket casserole cassette castle casual
catalyst catapult caterpillar cathedral cattle cauliflower caution
cavalry cave cavity cease cedar ceiling celebrate celery cellar cement
cemetery censor census ceramic ceremony certificate certify chalk
chamber champion chandelier chaos chapel chariot charity charm chase
chat chauffeur cheat checkpoint cheek cheer chef chemical chemistry
cherish cherry chess chew chili chill chime chimney chin chip chocolate
choir choke chop chord chorus chronic chunk cider cigar cinema cinnamon
cipher circus citizen citrus clam clamp clan clap clarify clarinet
clash clasp classic clay cleanse clergy clerk cliff cling clinic clip
cloak clog closet clot clove clown club clue clumsy clutch coal
coalition coarse cobalt cobra cocoa coconut cocoon cod coil coin
coincide collapse collar colleague collide colonel colony comb combat
comedy comet comma commander commence commerce commission commodity
commute compact companion compartment compass compassion compel
compensate compete competent complain complement compliment comply
compose compost compound comprehend compress compromise compute comrade
conceal concede conceive concentrate concert concession concise
condemn condense condone conductor cone confess confetti confide
confine confiscate confront congratulate congress conjunction conquer
conscience consensus consent conserve console consolidate conspiracy
constitute constrain consult contemplate contempt contend continent
contour contradict convene convenient convent conversation convey
convict convince convoy cope copper coral cord cordial corn
corporation corps corpse correlate correspond corridor corrupt cosmetic
cosmic costume cottage couch cough council counsel countdown
countryside county courier courtesy courtyard cousin cove cowboy
coyote crab cradle craft cram cramp crane crate crater crawl crayon
crazy cream crease creature credential creek creep crescent crest
cricket cripple crisis crisp criterion critic crocodile crook crop
croquet crow crown crude cruise crumb crusade crust crystal cub cube
cucumber cuddle cue cuff cuisine culprit cult cultivate cunning
cupboard curb curl currency curriculum curtain cushion custody cute
cylinder cynical dagger dairy daisy dam dame damp dandelion dare
darling dart dash dawn dazzle deacon dean dearth debris debut decay
deceive decent decimal deck decorate decoy decree dedicate deduce deed
deem deer defect defer deficit defy deity dejected delicate delicious
delight delirious deliver delta delude deluge demo demolish demon
demonstrate den denote dense dentist depart depict deplete deport
deposit depot depress deprive deputy derail descend desolate despair
desperate despise dessert destination destiny detach detain deter
detour devastate deviate devil devise devote devour dew diagnose
diagonal diagram dial dialect dialogue diameter diamond diaper diary
dice dictate dietary digest dignity dilemma dilute dim dime diminish
dine dinosaur dip diploma diplomat dire disaster disc discard
discipline disclose discount discourse discreet discrete discriminate
disdain disguise disgust dismal dismantle dispatch dispense disperse
displace dispose dispute disrupt dissent dissolve distill distort
distract distress disturb ditch dive diverse divert divine divorce
dizzy dock doctrine dodge doll dolphin dome domestic dominate donate
donkey donor doom dormitory dose dot dough dove dozen draft drag
dragon drain drastic dread drift drill drip drone drool droop drought
drown drowsy drum drumstick dual dubious duel duke dull dumb dune
dungeon duplicate durable duration dusk dwarf dwell dye dynamic dynasty
eagle earnest earthquake ease easel eclipse ecology edible editor
educate eel eerie effective efficiency effortless ego eighteen eighty
elaborate elastic elbow elder electric electronic elephant elevate
eleven eligible eliminate elite elm eloquent elude emanate embargo
embark embarrass emblem embrace embroider emerald emergency emigrate
eminent emperor empire empirical enact enchant encircle enclose
encounter encrypt endeavor endorse endure enforce engrave enhance
enigma enlighten enlist enormous enrich enroll ensemble ensure entail
entangle enterprise entertain enthusiasm entice entitle entrance
envelope envious envision envy epic episode epoch equation equator
equilibrium equip equivalent era eradicate erase erect erode errand
erupt escort espresso essence eternal ethic etiquette evacuate evade
evaporate eve evict evoke evolve exaggerate exalt exam excavate excel
excellent exception excerpt excess excursion exempt exhale exhaust
exhibit exile exotic expedition expel expire explicit explode exploit
explosion exponent expedite exquisite extinct extinguish extort
extravagant eyebrow fabric fabulous facade facility faction faculty
fad fade fairy falcon fame famine fancy fantasy fare farewell
fascinate fatal fatigue faucet favorite fawn feasible feast feather
federal fee feeble feedback fellow felony feminine fern ferry fertile
festival fetch feud fiber fiction fiddle fidelity fifteen fifty fig
filament filth fin finance finite firefighter fireplace firework
fiscal fishery fist fixture flake flame flank flannel flap flare
flash flask fleet flesh flick flicker fling flint flip flirt flock
flop floss flourish flu fluent fluffy fluid flush flute flutter foam
foe fog foil folk fond fondle font fool forbid forecast forehead
forge forgive fork former formula fort forth fortify fortnight forum
fossil foster foul fountain fox fraction fracture fragile fragment
fragrance frail franchise frank fraud freckle freight frenzy friction
fridge fright fringe frog frontier frost frown fudge fugitive fulfill
fumble fume funeral fungus funnel funny fur furious furnace furnish
furniture fury fuse fusion fuss futile gadget galaxy gale gallant
gallery gallon gallop gamble gang garage garbage garlic garment
garnish gasp gastric gaze gear gem gender gene generic generous
genius genre gentleman genuine geography geology geometry germ
gigantic giggle ginger giraffe glacier glance gland glare gleam glide
glimpse glitter gloom glory glossary glove glow glue gnome goat
goggles goodness goose gorgeous gorilla gossip gown grace gracious
grain grammar grandiose grape grasp grateful gratitude gravel gravity
graze grease greed grief grill grin grind grip groan grocer groom
groove grope gross grotesque grouch grove growl grudge grumble grunt
guarantee guardian guerrilla guild guilt guitar gulf gull gulp gum
gust gut gutter gym gypsy habitat hack hail hallway halt hamburger
hammer hammock hamper hamster handful handicap handkerchief handsome
handy hanger harbor hardship hare harmony harness harp harsh harvest
haste hasty hatch haul haunt haven havoc hawk hazard haze hazel
headache headline headquarters heal heap hearth hearty heater heaven
hedge heed heel hefty heir helicopter helmet hemisphere hen herald
herb herd heritage hermit hero hesitate hiccup hickory hierarchy
highway hijack hike hilarious hinder hinge hive hoard hoarse hobby
hockey hoist hollow holy homage homeland honey hood hoof hop horizon
horn hornet horror hose hostage hostile hound hover howl huddle hug
hull hum humble humid hummingbird hunch hundred hunger hurdle hurl
hurricane hush husk husky hut hybrid hydrogen hygiene hymn hyphen
hypothesis hysteria icicle icon idiom idiot idle idol igloo ignite
illuminate illusion illustrate imitate immense immerse immigrant
imminent immune imp impair impart impatient impeach imperial impose
impress imprint imprison impulse inaugurate incense incentive inch
incident incline inclined incorporate incur indifferent indigo
indulge inept inert infant infect inferior infinite inflate inflict
influence influenza informal infringe infuse ingenious ingredient
inhabit inhale inherent inherit inhibit initiate injection inland
inmate inn innate innocent innovate inquire insane inscription insect
insert insist inspect inspire instinct institute insulate insult
intact intake integer integrate integrity intellect intelligent
intercept interfere interior intermediate interpret interrupt
intersect intimate intricate intrigue intrude intuition invade
invalid invasion inventory invert invincible invisible invoice
irrigate irritate isolate itch ivory ivy jacket jade jagged jaguar
jail jam janitor jar jargon jasmine jaw jazz jealous jelly jeopardize
jerk jersey jest jet jewel jigsaw jingle jockey jog jolly jolt
jostle jot jug juggle jungle junior junk jury juvenile kangaroo keel
keg kennel kettle keyboard kidnap kidney kin kindle kingdom kiosk
kit kite kitten knack knapsack knead kneel knight knit knob knot
knuckle koala ladder ladle lagoon lair lamb lame lament lamp lance
landlord landmark landscape lane lantern lap lapse larva laser lasso
latch lateral lathe latitude latter lattice laundry lava lavender
lavish lawn leak leap lease leash leather ledge ledger leech leek
legacy legend legion legislate legitimate leisure lens lentil leopard
lethal lettuce levee lever levy liable liberal liberty librarian lick
lid lieutenant lighthouse lightning lilac lily limb limestone
limousine limp linen linger lining lion liquid liquor litigate
litter lively liver lizard llama lobby lobe lobster locate
locomotive lodge loft lofty logo loiter lone lonely longitude loom
loot lord lotion lottery lotus lounge lousy loyal lubricate lucid
luggage lull lumber luminous lump lunar lure lurk lush lust luxury
lyric macaroni machinery mackerel madam magazine magnet magnificent
magnify magnitude maid maiden mainland mainstream majesty malice
mall mammal mammoth mandate mane maneuver mango mania manifest
manifold mankind mansion mantle manufacture manure manuscript maple
marble mare marine maritime marmalade maroon marsh marshal marvel
masculine mash mason masquerade massacre massage massive mast mat
matrix mattress maxim mayor maze meadow meager meantime meanwhile
medal meddle mediate medieval meditate mellow melody melon melt
memo memoir memorial menace mend mentor merchant mercury mercy mere
meridian mermaid merry mesh mesmerize metaphor meteor meter metric
metropolitan microphone microscope midday midnight midst migrate
mildew military militia mill millennium million mimic mince mineral
mingle miniature minimal minister mink minnow mint miracle mirage
mischief miser misery misfortune mishap missile mist mistress
mitten moan moat mob mock mockingbird moderate molar mold mole
molecule molten monarch monastery monk monkey monopoly monsoon
monster monument moose mop morale morbid morsel mortal mortar
mortgage mosaic mosque mosquito moss motel moth motive mound mourn
mule multiply mumble mundane municipal mural murder murky murmur
mushroom musket mustache mustard mute mutiny mutter mutton muzzle
myriad myth nag naive nap napkin narrate nasal nasty naughty nausea
navigate navy nectar needy negotiate nephew nerve nestle nettle
neutron nibble niche nickel nickname niece nimble nitrogen noble
nocturnal nod nominal nominate nonsense noodle nook noon norm
nostalgia nostril notable notary notch notify notorious nourish
novice nozzle nuance nucleus nudge nugget nuisance numb numeral
numerous nun nursery nurture nutmeg nutrition nylon oak oar oasis
oath oatmeal obedient obese obey obituary oblige oblique obliterate
oblivion oblong obnoxious obscure obsess obsolete obstacle obstruct
occult octave octopus odor offend offense offspring ointment olive
omelette omen ominous omit onion onset onward ooze opaque opera
opponent oppress optic optimal optimist oracle oral orbit orchard
orchestra ordain ordeal ore organic organism orient ornament orphan
ostrich otter ottoman ounce oust outbreak outcast outcome outdo
outfit outlaw outlet outline outlook outpost outrage outright
outskirts outstanding oval ovation overboard overcast overcome
overdose overdue overflow overhaul overhead overhear overlook
overnight overseas oversee overt overthrow overture overturn
overwhelm owl oxide oxygen oyster ozone pact paddle paddock pagan
pageant pagoda pail palace palate pale palette palm pamphlet pancake
pane pang pant pantry papaya parachute parade paradise paradox
paraffin parakeet parcel parched parchment pardon parish parlor
parole parrot parsley parsnip partial partisan partition passion
passive passport password pastel pastime pastor pastry pasture pave
pavilion paw pawn peach peacock peanut pear pearl peasant pebble
pecan peck peculiar pedal peddle pedestal pedestrian pedigree peek
peel peer peg pelican pellet pelt penguin peninsula penny pension
peony perceive perch percussion peril perimeter perish perjury perk
permanent permeate perpetual perplex persecute persevere persist
persona personnel perspective persuade pertain pest pestle petal
petition petroleum petty pew phantom pharmacy phenomenon philosopher
phobia phoenix phonetic phony phosphorus physician physique pianist
pickle picnic pictorial pier pierce piety pigeon pigment pike
pilgrim pillar pillow pimple pinch pinnacle pint pioneer pious
pirate pistol piston pit pivot pixel placard placid plague plaid
plank plankton plaque plasma plaster plateau platinum platoon
platter plausible plaza plea plead pledge plight plow pluck plug plum
plumber plume plunder plunge plural plush plywood poach pod podium
poison poke polar pole pollen pollute polygon pomp poncho pond
ponder pony poodle popcorn poplar poppy porcelain porch porcupine
pore pork porridge portal porter portfolio portray posse posture
potent pottery pouch poultry pounce pound poverty powder prairie
prank prawn preach precaution precede precinct precious precise
predator predecessor preface prehistoric prejudice prelude premier
premise premium preoccupy prescribe prestige presume pretext prevail
prey priest primitive prince princess principal prism pristine
privilege probe proclaim prodigy profound prognosis prohibit
projectile prolong promenade prominent pronoun prone prong pronounce
prop propaganda propel prophet proposition proprietor prose prosecute
prospect prosper protagonist protein prototype protrude proverb
province provision provoke prowl proximity proxy prudent prune pry
psalm psyche pub puberty puddle pudding puff pulp pulpit pulse puma
pumpkin punch punctual puncture pundit pupil puppet puppy purchase
purge purify purity purse pursue pursuit pus putty pyramid python
quack quadrant quail quaint quake qualm quantum quarantine quarrel
quarry quart quartz quay queasy quell quench quest quill quilt
quintet quirk quiver quiz quota quotient rabbit rabid raccoon racket
radar radiant radiate radical radish raft rag rage ragged raid
railing railroad raisin rake rally ram ramble ramp rampage ranch
rancid randomize ransom rant rap rapport raptor rascal rash raspberry
rat rattle ravage rave raven ravine ravish rawhide ray rayon razor
realm ream reap rear rebate rebel rebuke recede receipt receptacle
recess recite reckless reckon recline recluse recoil recollect
reconcile recount recruit rectangle rectify recur recycle redeem
reed reef reek reel refine refinery reflex refrain refuge refund
refute regal regime regiment regain rehearse reign rein reindeer
reinforce reiterate rejoice relapse relay relic relish relinquish
reluctant remedy reminisce remnant remorse remuneration rend renegade
renew renounce renovate renown repeal repel repent repertoire replica
replenish repose repress reprieve reprimand reprisal reproach
reptile republic repulse reputation requiem requisite resemble
resent reservoir reside residue resign resin resolute resonance
resort resume retail retaliate reticent retina retort retract
retreat retrieve retro revel revere revert revive revoke revolt
revolve revolver rhapsody rhetoric rhino rhubarb rhyme rhythm rib
ribbon riddle ridge ridicule rifle rift rig rigid rigor rim rind
riot ripe ripple rite ritual rival rivet roam roar roast robe robin
robot robust rocket rod rodent rogue romance romp rooster rooted
rosemary roster rostrum rot rotate rotten rouge roulette rove rower
rubble ruby rudder rug rugged ruin rumble rummage rumor rump rung
runway rupture rustic rustle rut ruthless rye saber sabotage sack
sacred sacrifice saddle safari saffron saga sage sagebrush salamander
salmon salon saloon salute salvage salvation sanctuary sanction
sandal sandwich sane sanitary sap sapphire sarcasm sardine sash
satchel satellite satin satire saturate saunter sausage savage
savanna savor saw saxophone scaffold scald scallop scalp scamper
scandal scant scar scarce scare scarf scatter scavenger scenario
scent scepter scholar scoop scooter scope scorch scorn scorpion
scoundrel scour scout scowl scramble scrap scrape scrawl scream
screech screw scribble scribe scroll scrub scruffy sculpt sculpture
scum scurry scythe seam seaport sear seashore seaweed secluded
secrecy secretary sect sedan sediment seduce seep seethe seize
seldom selfish seminar senate senator sentinel sentry serene
sergeant sermon serpent serum servant sesame settler sever severe
sew sewage shabby shack shackle shaft shaggy shale shallow sham
shamble shame shampoo shamrock shanty shard shark shatter shave
shawl shear sheath shed sheen shepherd sheriff shield shimmer shin
shingle shiver shoal shore shorthand shortage shove shovel shred
shrewd shriek shrill shrimp shrine shrink shroud shrub shrug shudder
shuffle shun shutter shuttle shy sibling siege sieve sift sigh
silhouette silk sill silo silt simmer simultaneous sinister sip
siren sirloin sizzle skeleton skeptic sketch skewer ski skid skillet
skim skirmish skirt skull skunk slab slack slam slander slang slant
slap slate slaughter slave sled sleek sleet sleeve sleigh slender
slick slim slime sling slither sliver slogan slot sloth slouch
sludge slug sluggish slum slumber slump slur smack smash smear smirk
smite smog smolder smother smudge smug smuggle snack snail snap
snare snarl snatch sneak sneer sneeze snicker sniff snip snipe
snore snorkel snort snout snub snug soak soap soar sob sober soccer
sociable sodium sofa soggy sole solemn solitude solo soluble solvent
somber sonata sonnet soot soothe sophisticated soprano sorcery
sordid sore sorrow sovereign spacious spade spaghetti span spaniel
spank sparkle sparrow sparse spasm spatial spatter spawn spear
specimen speck spectacle spectrum speculate sphere spice spider
spike spill spinach spinal spindle spine spiral spire spit spite
splash splendid splendor splint splinter sponge sponsor spool spoon
sporadic spouse spout sprain sprawl spray sprig sprinkle sprint
sprout spruce spur spurn spy squad squadron squall squander squash
squat squeak squeal squeeze squid squint squirm squirrel squirt
stab stadium stagger stagnant stain stake stale stalk stall
stallion stamina stammer stampede stanza staple starboard starch
stark starve stash stately statue stature statute staunch stave
steak stealth steed steer stellar stencil stepping sterile stern
stew steward stifle stigma stilt stimulate sting stingy stink
stipulate stir stitch stockade stocking stoop stout stove stow
straddle straggle strain strait strand strap stratagem stratum
straw strawberry stray streak strenuous stride strife stripe strive
stroll strut stubborn stucco stud studio stumble stump stun stunt
stupendous sturdy stutter suave subdue subliminal submarine submerge
subordinate subscribe subsequent subside subsidy substitute subtract
suburb subvert succumb suction sue suede suffice suffix suffocate
suffrage suite sulfur sulk sullen sultan sultry summit summon
sumptuous sunder sundry sunflower sunrise sunset superb superficial
superior supernatural supersede superstition supervise supplant
supple suppress supreme surcharge surge surgeon surmise surpass
surplus surrender surveillance suspend sustain swagger swallow swamp
swan swarm swat sway swear sweat sweater sweep swell swerve swift
swine swirl swoop sword sycamore syllable symmetry symphony symptom
synagogue synchronize syndicate synonym synopsis syringe syrup
tabernacle tablet taboo tack tackle tact tactic tadpole taffeta tag
tailor taint talon tambourine tame tamper tan tangent tangerine
tangible tangle tantrum tapestry tar tarantula tardy tariff tarnish
tart tassel tattered tattoo taunt tavern tawny taxi teal tease
teaspoon tedious teem telegraph telescope temper tempest temple
tempo tempt tenant tenement tennis tenor tent tentacle tentative
tenure tepid terminate terrace terrain terrestrial territory terror
testament testify testimony tether texture thatch thaw theft
theology therapy thermal thermometer thesis thicket thigh thimble
thirst thistle thorn thorough thrash thresh threshold thrift thrill
thrive throb throne throng throttle thrust thud thug thump thunder
thwart tiara tick tidal tidy tiger tile till tilt timber timid tin
tinder tinge tingle tinker tinsel tint titan tithe toad toddler
toil toll tomb tonic topple torch torment tornado torpedo torrent
torso tortoise torture toss tot totter toucan touchdown tournament
tow trachea tract tractor trademark traitor tram trample trampoline
trance tranquil transact transcend transcribe transit transition
translucent transmit transparent transplant trauma traverse
treacherous tread treason treasure treaty treble trek trellis
tremble tremendous tremor trench trespass tress trestle tributary
tribute trifle trill trinket trio triple tripod triumph trivial
trolley trombone troop trophy tropical trot trough trounce troupe
trowel truant truce trudge trumpet truncate trunk truss trustee
tryst tuba tuck tuft tug tuition tulip tumble tumult tundra tunic
turban turbine turbulent turf turkey turmoil turnip turnpike
turpentine turquoise turret turtle tusk tutor tuxedo twang tweak
tweed twig twilight twin twine twinge twinkle twirl twitch tycoon
typhoon tyranny tyrant udder ulcer ultimate umbrella umpire uncanny
uncouth unction undergo undermine underneath understudy undertake
undo unduly unearth uneasy unfold unfurl ungainly unicorn uniform
unify unique unison unite unity unleash unravel unruly unveil
upbraid upheaval uphold upholster upkeep uplift uproar uproot
upstairs upward uranium urchin urgent urn usher usurp utensil utter
vacant vacate vaccine vacuum vagabond vague vain valiant valor
valve vampire vandal vane vanguard vanilla vanish vanity vanquish
vapor varnish vase vassal vault vaunt veal veer vegetarian vehement
veil vein velocity velvet vendor veneer venerable vengeance venison
venom vent venture venue veranda verb verbal verdict verge vermin
versatile vertebra vertex vessel vest vestibule veteran veto vex
viaduct vial vibrant vibrate vicar vice vicinity vicious victor
vigil vigilant vigor vile villa villain vindicate vine vinegar
vineyard vintage vinyl viola violate violet violin viper virgin
virtue virus visa viscous vise vista vivid vocal vocation vogue
void volatile volcano volley volt voluntary volunteer vomit voracious
vortex vouch voucher vow vowel voyage vulgar vulnerable vulture wad
waddle wade wafer waffle wag wagon wail waist waive walnut walrus
waltz wand wander wane want ward wardrobe warehouse warfare warp
warrant warrior wart wary wasp watchdog waterfall watt weary weasel
weave web wedge weed weep weevil weird weld welfare welt wench whale
wharf wheat whiff whim whimper whine whinny whip whirl whisk whisker
whisper whistle whittle wholesale wholesome whoop wick wicked wicker
widget widow width wield wig wiggle wilderness wilt wince winch
windmill windshield wink wipe wisdom wisp wistful wit witch withdraw
wither withhold withstand witness witty wizard wobble woe womb
wonderful woo woodland woodpecker workshop worm worship worthwhile
worthy wound wrangle wreath wreck wren wrench wrestle wretch wriggle
wring wrinkle wrist writhe wrought yacht yak yam yank yarn yawn
yearn yeast yelp yoga yogurt yoke yolk yonder yore youngster youth
zeal zebra zenith zephyr zest zigzag zinc zipper zodiac zoom
"""


# Added verbatim, no inflection: vocabulary common in source comments
# (legal boilerplate, programming jargon) that the base list misses.
SUPPLEMENT = """
copyright copyrights copyrighted copyleft license licence licensed licenses
licensing warranty warranties merchantability noninfringement sublicense
redistribute redistributed redistribution trademark trademarks foundation
foundations contributor contributors maintainer maintainers changelog
boolean booleans integer integers string strings tuple tuples iterable
iterables iterator iterators callable callables subclass subclasses
superclass metaclass metadata runtime runtimes filename filenames
namespace namespaces pathname dirname basename stdout stderr stdin
unicode ascii utf whitespace newline newlines substring substrings
regex regexes todo fixme deprecated deprecation init repr bool int str
len obj attr attrs env args kwargs param params api apis url urls uri
uris http https json xml yaml html css sql backend backends frontend
middleware plugin plugins hostname hostnames localhost async await
coroutine coroutines subprocess subprocesses multiprocessing dataset
datasets dataframe dataframes tokenizer tokenizers tokenize tokenized
byte bytes timestamp timestamps timezone timezones timeout timeouts
docstring docstrings changeset lookup lookups fallback fallbacks
placeholder placeholders wildcard wildcards delimiter delimiters
whitelist blacklist lowercase uppercase lowercased uppercased lexer
lexers tokenizers spectral density densities tolerant intolerant
serialize serialized serializer deserialize deserialized validator
validators microsecond microseconds millisecond milliseconds nanosecond
nanoseconds superuser username usernames passwords hash hashes hashed
checksum checksums endianness bitwise bytecode opcode opcodes traceback
tracebacks backslash backslashes slash slashes tilde caret asterisk
underscore underscores parenthesis parentheses bracket brackets brace
braces colon colons semicolon semicolons comma commas quotation
apostrophe hyphen hyphens indentation dedent unindent linter linters
refactor refactored refactoring backport backported backports
"""


def inflections(word):
    forms = {word}
    # plural / third person
    if word.endswith(("s", "x", "z", "ch", "sh")):
        forms.add(word + "es")
    elif word.endswith("y") and len(word) > 2 and word[-2] not in "aeiou":
        forms.add(word[:-1] + "ies")
    else:
        forms.add(word + "s")
    # past / participle / progressive / agent / comparative
    if word.endswith("e"):
        stem = word[:-1]
        forms.update({word + "d", stem + "ing", stem + "er", stem + "ers", stem + "est"})
    elif word.endswith("y") and len(word) > 2 and word[-2] not in "aeiou":
        forms.update({word[:-1] + "ied", word + "ing", word[:-1] + "ier", word[:-1] + "iest"})
    else:
        forms.update({word + "ed", word + "ing", word + "er", word + "ers", word + "est"})
    # adverb / quality
    if len(word) > 3:
        if word.endswith("y") and word[-2] not in "aeiou":
            forms.add(word[:-1] + "ily")
        else:
            forms.add(word + "ly")
        forms.add(word + "ness")
    return forms


def build_lexicon():
    words = set()
    for blob in (FUNCTION_WORDS, IRREGULAR, SUPPLEMENT):
        words.update(blob.split())
    for base in BASE.split() + BASE2.split():
        words.update(inflections(base))
    words = {w.lower() for w in words if w}
    return sorted(words)


def ascii_latin1_lower(text):
    # mirrors the runtime lowercasing: ASCII + Latin-1 supplement only
    out = []
    for ch in text:
        cp = ord(ch)
        if ord("A") <= cp <= ord("Z"):
            out.append(chr(cp + 0x20))
        elif 0xC0 <= cp <= 0xDE and cp != 0xD7:
            out.append(chr(cp + 0x20))
        else:
            out.append(ch)
    return "".join(out)


def trigram_profile(text):
    counts = {}
    for line in text.strip().splitlines():
        tokens = ascii_latin1_lower(line).split()
        if not tokens:
            continue
        padded = " " + " ".join(tokens) + " "
        for i in range(len(padded) - 2):
            tri = padded[i : i + 3]
            counts[tri] = counts.get(tri, 0) + 1
    top = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))[:TOP_TRIGRAMS]
    # sqrt dampening keeps a handful of function-word trigrams from
    # dominating the vector, which would make cosine scores on 4-token
    # windows swing on one or two shared trigrams
    damped = [(tri, math.sqrt(n)) for tri, n in top]
    total = sum(n for _, n in damped)
    return {tri: n / total for tri, n in damped}


def main():
    os.makedirs(DATA_DIR, exist_ok=True)

    profiles = {lang: trigram_profile(text) for lang, text in sorted(SEED.items())}
    profiles_path = os.path.join(DATA_DIR, "langid_profiles.json")
    with open(profiles_path, "w", encoding="utf-8") as f:
        json.dump(profiles, f, ensure_ascii=False, sort_keys=True, indent=1)
        f.write("\n")

    lexicon = build_lexicon()
    assert len(lexicon) >= 20000, f"lexicon too small: {len(lexicon)}"
    lexicon_path = os.path.join(DATA_DIR, "english_lexicon.txt")
    with open(lexicon_path, "w", encoding="utf-8") as f:
        f.write("\n".join(lexicon) + "\n")

    for lang, prof in profiles.items():
        s = sum(prof.values())
        assert abs(s - 1.0) < 1e-9, f"{lang} profile does not sum to 1: {s}"
    print(f"wrote {profiles_path} ({len(profiles)} languages)")
    print(f"wrote {lexicon_path} ({len(lexicon)} words)")


if __name__ == "__main__":
    main()
